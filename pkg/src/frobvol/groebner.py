"""Ideal arithmetic and membership oracles.

Buchberger's algorithm with the normal selection strategy, normal forms,
Frobenius powers, sums/products/powers/intersections, radical membership,
staircase counting and combinatorial Krull dimension. Completed bases are
immutable and cached; reduction against a shared basis is pure.
"""

from __future__ import annotations

import heapq
import itertools

from .errors import BadInputError, RingMismatchError, SearchLimitError
from .ring import (
    Polynomial,
    PolynomialRing,
    _fresh_aux_name,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class Ideal:
    """An ideal given by a generator list; zero generators are dropped.

    The user-supplied list length (after dropping zeros) doubles as the
    minimal-generator-count surrogate in all finiteness bounds.
    """

    __slots__ = ("ring", "gens", "_key")

    def __init__(self, ring: PolynomialRing, gens):
        self.ring = ring
        kept = []
        for g in gens:
            if not isinstance(g, Polynomial):
                raise BadInputError(f"ideal generator is not a polynomial: {g!r}")
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero:
                kept.append(g)
        self.gens = tuple(kept)
        self._key = None

    @classmethod
    def of(cls, *gens):
        if not gens:
            raise BadInputError("need at least one generator expression")
        return cls(gens[0].ring, gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def num_gens(self) -> int:
        return len(self.gens)

    def key(self) -> tuple:
        if self._key is None:
            self._key = (
                self.ring.p,
                self.ring.variables,
                self.ring.order._signature(),
                tuple(g.key() for g in self.gens),
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) if self.gens else "0"
        return f"({inside})"


class QuotientPresentation:
    """Work in R/a by adjoining a's generators to every containment test."""

    __slots__ = ("ring", "relations")

    def __init__(self, ring: PolynomialRing, relations: Ideal | None = None):
        if relations is not None and relations.ring != ring:
            raise RingMismatchError("presentation ideal from a different ring")
        self.ring = ring
        self.relations = relations if relations is not None else Ideal(ring, ())

    @property
    def trivial(self) -> bool:
        return self.relations.is_zero

    def key(self) -> tuple:
        return self.relations.key()

    def __eq__(self, other):
        return isinstance(other, QuotientPresentation) and self.key() == other.key()

    def __hash__(self):
        return hash(("pres", self.key()))

    def __repr__(self):
        return f"QuotientPresentation({self.relations!r})"


def _presentation_gens(ring: PolynomialRing, pres) -> tuple:
    if pres is None:
        return ()
    if pres.ring != ring:
        raise RingMismatchError("presentation from a different ring")
    return pres.relations.gens


class LengthValue:
    """A nonnegative integer length, or the infinite marker."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value  # None encodes +infinity

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __int__(self):
        if self.value is None:
            raise ValueError("length is infinite")
        return self.value

    def __eq__(self, other):
        if isinstance(other, LengthValue):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(("LengthValue", self.value))

    def __repr__(self):
        return "LengthValue(inf)" if self.value is None else f"LengthValue({self.value})"


INFINITE_LENGTH = LengthValue(None)


# ---------------------------------------------------------------------------
# Division and Buchberger
# ---------------------------------------------------------------------------

class GroebnerBasis:
    """A reduced, monic Groebner basis, sorted by leading monomial (ascending)."""

    __slots__ = ("ring", "polys", "leading_monomials", "_tails", "is_monomial")

    def __init__(self, ring: PolynomialRing, polys):
        self.ring = ring
        key = ring.order.key
        polys = sorted(polys, key=lambda f: key(f.leading()[0]))
        self.polys = tuple(polys)
        self.leading_monomials = tuple(f.leading()[0] for f in polys)
        tails = []
        for f in polys:
            lm, _ = f.leading()
            tails.append(tuple((m, c) for m, c in f.coeffs.items() if m != lm))
        self._tails = tuple(tails)
        self.is_monomial = all(len(f.coeffs) == 1 for f in polys)

    @property
    def contains_one(self) -> bool:
        return len(self.polys) == 1 and self.polys[0] == self.ring.one()

    def reduce(self, f: Polynomial) -> Polynomial:
        """Remainder of multivariate division of f by the basis."""
        if f.ring != self.ring:
            raise RingMismatchError("polynomial from a different ring")
        if f.is_zero or not self.polys:
            return f
        lms = self.leading_monomials
        if self.is_monomial:
            out = {
                m: c
                for m, c in f.coeffs.items()
                if not any(mono_divides(lm, m) for lm in lms)
            }
            return Polynomial(self.ring, out)
        p = self.ring.p
        okey = self.ring.order.key
        tails = self._tails
        work = dict(f.coeffs)
        rem = {}
        while work:
            m = max(work, key=okey)
            c = work.pop(m)
            for i, lm in enumerate(lms):
                if mono_divides(lm, m):
                    shift = mono_div(m, lm)
                    # basis is monic: subtract c * x^shift * tail
                    for tm, tc in tails[i]:
                        key2 = mono_mul(tm, shift)
                        v = (work.get(key2, 0) - c * tc) % p
                        if v:
                            work[key2] = v
                        elif key2 in work:
                            del work[key2]
                    break
            else:
                rem[m] = c
        return Polynomial(self.ring, rem)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __repr__(self):
        return f"GroebnerBasis[{', '.join(str(g) for g in self.polys)}]"


def _top_reduce(coeffs: dict, basis: list, ring: PolynomialRing) -> Polynomial:
    """Full reduction of a raw coefficient dict against a monic working basis."""
    p = ring.p
    okey = ring.order.key
    lms = [g.leading()[0] for g in basis]
    tails = [
        [(m, c) for m, c in g.coeffs.items() if m != lm]
        for g, lm in zip(basis, lms)
    ]
    work = dict(coeffs)
    rem = {}
    while work:
        m = max(work, key=okey)
        c = work.pop(m)
        for i, lm in enumerate(lms):
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                for tm, tc in tails[i]:
                    key2 = mono_mul(tm, shift)
                    v = (work.get(key2, 0) - c * tc) % p
                    if v:
                        work[key2] = v
                    elif key2 in work:
                        del work[key2]
                break
        else:
            rem[m] = c
    return Polynomial(ring, rem)


def buchberger(gens, ring: PolynomialRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Deterministic: pairs are selected by smallest lcm in the ring order with
    ties broken by insertion index (normal strategy); coprime leading
    monomials are skipped.
    """
    if isinstance(gens, Ideal):
        ring = gens.ring
        gens = gens.gens
    gens = [g for g in gens if not g.is_zero]
    if ring is None:
        if not gens:
            raise BadInputError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    if not gens:
        return GroebnerBasis(ring, ())
    okey = ring.order.key
    p = ring.p

    basis: list[Polynomial] = []
    pairs: list[tuple] = []

    def push(f: Polynomial):
        f = f.monic()
        j = len(basis)
        lm_j = f.leading()[0]
        for i in range(j):
            lm_i = basis[i].leading()[0]
            lcm = mono_lcm(lm_i, lm_j)
            if lcm == mono_mul(lm_i, lm_j):
                continue  # coprime leading terms: S-pair reduces to zero
            heapq.heappush(pairs, (okey(lcm), i, j, lcm))
        basis.append(f)

    for g in gens:
        push(g)

    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        fi, fj = basis[i], basis[j]
        lm_i = fi.leading()[0]
        lm_j = fj.leading()[0]
        # s-poly of monic fi, fj
        si = mono_div(lcm, lm_i)
        sj = mono_div(lcm, lm_j)
        s = {}
        for m, c in fi.coeffs.items():
            key2 = mono_mul(m, si)
            s[key2] = (s.get(key2, 0) + c) % p
        for m, c in fj.coeffs.items():
            key2 = mono_mul(m, sj)
            s[key2] = (s.get(key2, 0) - c) % p
        s = {m: c for m, c in s.items() if c}
        r = _top_reduce(s, basis, ring)
        if not r.is_zero:
            push(r)

    return GroebnerBasis(ring, _autoreduce(basis, ring))


def _autoreduce(basis: list, ring: PolynomialRing) -> list:
    """Minimalize and tail-reduce a monic Groebner generating set."""
    okey = ring.order.key
    basis = sorted(basis, key=lambda f: okey(f.leading()[0]))
    minimal: list[Polynomial] = []
    for f in basis:
        lm = f.leading()[0]
        if not any(mono_divides(g.leading()[0], lm) for g in minimal):
            minimal.append(f)
    reduced = list(minimal)
    for i, f in enumerate(minimal):
        others = reduced[:i] + reduced[i + 1:]
        r = _top_reduce(dict(f.coeffs), others, ring) if others else f
        reduced[i] = r.monic()
    return reduced


# ---------------------------------------------------------------------------
# Cached basis access
# ---------------------------------------------------------------------------

_GB_CACHE: dict = {}


def groebner_basis(ideal: Ideal, pres: QuotientPresentation | None = None) -> GroebnerBasis:
    """Reduced basis of ideal + presentation relations, cached."""
    extra = _presentation_gens(ideal.ring, pres)
    cache_key = (ideal.key(), tuple(g.key() for g in extra))
    hit = _GB_CACHE.get(cache_key)
    if hit is None:
        hit = buchberger(list(ideal.gens) + list(extra), ideal.ring)
        _GB_CACHE[cache_key] = hit
    return hit


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.reduce(f)


def ideal_contains(inner: Ideal, outer: Ideal, pres: QuotientPresentation | None = None) -> bool:
    """True iff inner is contained in outer (modulo the presentation)."""
    if inner.ring != outer.ring:
        raise RingMismatchError("ideals from different rings")
    gb = groebner_basis(outer, pres)
    return all(gb.reduce(g).is_zero for g in inner.gens)


def ideal_equal(a: Ideal, b: Ideal, pres: QuotientPresentation | None = None) -> bool:
    return ideal_contains(a, b, pres) and ideal_contains(b, a, pres)


# ---------------------------------------------------------------------------
# Frobenius powers
# ---------------------------------------------------------------------------

def _power_of(q: int, p: int) -> int:
    """The e with q = p^e, or raise."""
    if q < 1:
        raise BadInputError(f"{q} is not a power of {p}")
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise BadInputError("bracket power index must be a power of the characteristic")
    return e


def frobenius_power(J: Ideal, q: int) -> Ideal:
    """The bracket power generated by g^q for each generator, q a power of p."""
    _power_of(q, J.ring.p)
    return Ideal(J.ring, tuple(g.frobenius(q) for g in J.gens))


def frobenius_basis(J: Ideal, q: int, pres: QuotientPresentation | None = None) -> GroebnerBasis:
    """Cached basis of J^[q] (+ presentation).

    In the polynomial ring the reduced basis of J^[q] is the exponent-scaled
    reduced basis of J: scaling every exponent by q preserves the term order
    and S-pair reductions, and c^q = c on F_p coefficients. With a nontrivial
    presentation the scaled basis only seeds Buchberger.
    """
    _power_of(q, J.ring.p)
    extra = _presentation_gens(J.ring, pres)
    cache_key = ("frob", J.key(), q, tuple(g.key() for g in extra))
    hit = _GB_CACHE.get(cache_key)
    if hit is not None:
        return hit
    base = groebner_basis(J)
    scaled = [g.frobenius(q) for g in base.polys]
    if not extra:
        gb = GroebnerBasis(J.ring, scaled)
    else:
        gb = buchberger(scaled + list(extra), J.ring)
    _GB_CACHE[cache_key] = gb
    return gb


# ---------------------------------------------------------------------------
# Sums, products, powers, intersections
# ---------------------------------------------------------------------------

def _dedup(polys) -> tuple:
    seen = {}
    for g in polys:
        if not g.is_zero:
            seen.setdefault(g.key(), g)
    return tuple(seen.values())


def ideal_sum(*ideals: Ideal) -> Ideal:
    if not ideals:
        raise BadInputError("need at least one ideal")
    ring = ideals[0].ring
    gens = []
    for I in ideals:
        if I.ring != ring:
            raise RingMismatchError("ideals from different rings")
        gens.extend(I.gens)
    return Ideal(ring, _dedup(gens))


def ideal_product(*ideals: Ideal) -> Ideal:
    if not ideals:
        raise BadInputError("need at least one ideal")
    ring = ideals[0].ring
    for I in ideals:
        if I.ring != ring:
            raise RingMismatchError("ideals from different rings")
    if any(I.is_zero for I in ideals):
        return Ideal(ring, ())
    gens = [ring.one()]
    for I in ideals:
        gens = [u * v for u in gens for v in I.gens]
        gens = list(_dedup(gens))
    return Ideal(ring, gens)


def ideal_power(I: Ideal, a: int) -> Ideal:
    """I^a on generator sets, by repeated squaring with deduplication."""
    if a < 0:
        raise BadInputError("ideal power must be nonnegative")
    ring = I.ring
    if a == 0:
        return Ideal(ring, (ring.one(),))
    if I.is_zero:
        return I
    result = None
    sq = I.gens
    k = a
    while k:
        if k & 1:
            result = sq if result is None else _dedup(u * v for u in result for v in sq)
        k >>= 1
        if k:
            sq = _dedup(u * v for u in sq for v in sq)
    return Ideal(ring, result)


def ideal_intersection(A: Ideal, B: Ideal) -> Ideal:
    """A ∩ B by the auxiliary-variable elimination method."""
    ring = A.ring
    if B.ring != ring:
        raise RingMismatchError("ideals from different rings")
    if A.is_zero or B.is_zero:
        return Ideal(ring, ())
    w_name = _fresh_aux_name(ring, "w")
    ext = ring.extended((w_name,))
    w = ext.gens()[0]
    one = ext.one()
    gens = [w * ring.inject(g, ext) for g in A.gens]
    gens += [(one - w) * ring.inject(g, ext) for g in B.gens]
    gb = buchberger(gens, ext)
    kept = [ring.project(g, ext) for g in gb.polys if not any(m[0] for m in g.coeffs)]
    return Ideal(ring, _dedup(kept))


def radical_membership(f: Polynomial, J: Ideal, pres: QuotientPresentation | None = None) -> bool:
    """True iff some power of f lies in J (modulo the presentation).

    Uses the extra-variable trick: f is in the radical iff
    1 lies in J + (1 - w*f) in the ring with one more variable w.
    """
    ring = J.ring
    if f.ring != ring:
        raise RingMismatchError("polynomial from a different ring")
    if f.is_zero:
        return True
    w_name = _fresh_aux_name(ring, "w")
    ext = ring.extended((w_name,))
    w = ext.gens()[0]
    gens = [ring.inject(g, ext) for g in J.gens]
    gens += [ring.inject(g, ext) for g in _presentation_gens(ring, pres)]
    gens.append(ext.one() - w * ring.inject(f, ext))
    gb = buchberger(gens, ext)
    return gb.contains_one


def power_containment_index(I: Ideal, J: Ideal, pres: QuotientPresentation | None = None,
                            cap: int = 512) -> int:
    """Least k >= 1 with I^k contained in J, by incremental search up to `cap`."""
    if I.is_zero:
        return 1
    gb = groebner_basis(J, pres)
    if gb.contains_one:
        return 1
    # normal forms are membership-preserving, so powers can be built reduced
    base = _dedup(gb.reduce(g) for g in I.gens)
    current = base
    for k in range(1, cap + 1):
        if not current:
            return k
        current = _dedup(gb.reduce(u * v) for u in current for v in base)
    raise SearchLimitError(
        f"no power of {I!r} landed in {J!r} within cap {cap}; raise the cap or fix the input"
    )


# ---------------------------------------------------------------------------
# Staircase counting and dimension
# ---------------------------------------------------------------------------

def _minimalize_monomials(exps: list) -> list:
    exps = sorted(set(exps))
    out = []
    for m in exps:
        if not any(mono_divides(k, m) for k in out):
            out.append(m)
    return out


def _staircase_is_finite(exps: list, nvars: int) -> bool:
    for i in range(nvars):
        if not any(m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i) for m in exps):
            return False
    return True


def _staircase_count(exps: list, nvars: int) -> int:
    """Number of monomials outside the monomial ideal; staircase must be finite."""
    if any(not any(m) for m in exps):
        return 0
    if nvars == 0:
        return 1
    last = nvars - 1
    pure = [m[last] for m in exps if m[last] > 0 and not any(m[:last])]
    bound = min(pure)
    cuts = sorted({m[last] for m in exps if m[last] < bound} | {0})
    total = 0
    for idx, v in enumerate(cuts):
        width = (cuts[idx + 1] if idx + 1 < len(cuts) else bound) - v
        layer = [m[:last] for m in exps if m[last] <= v]
        layer = _minimalize_monomials(layer)
        total += width * _staircase_count(layer, last)
    return total


def staircase_count_of(gb: GroebnerBasis) -> LengthValue:
    """Number of standard monomials of a completed basis."""
    if gb.contains_one:
        return LengthValue(0)
    nvars = gb.ring.nvars
    exps = _minimalize_monomials(list(gb.leading_monomials))
    if not _staircase_is_finite(exps, nvars):
        return INFINITE_LENGTH
    return LengthValue(_staircase_count(exps, nvars))


def standard_monomial_count(J: Ideal, pres: QuotientPresentation | None = None) -> LengthValue:
    """Vector-space dimension of R/(J + presentation) via its staircase."""
    return staircase_count_of(groebner_basis(J, pres))


def krull_dimension(J: Ideal, pres: QuotientPresentation | None = None) -> int:
    """dim R/(J + presentation): largest variable subset meeting no leading support."""
    gb = groebner_basis(J, pres)
    nvars = J.ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials]
    if any(not s for s in supports):
        return -1  # unit ideal: empty spectrum
    for size in range(nvars, -1, -1):
        for combo in itertools.combinations(range(nvars), size):
            s = set(combo)
            if not any(sup <= s for sup in supports):
                return size
    return -1
