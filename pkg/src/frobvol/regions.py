"""Lattice combinatorics of escape sets.

For a sequence of ideals I_1, ..., I_t and a p-family of reference ideals,
the level-e escape set is the set of exponent tuples a in N^t whose product
ideal I_1^{a_1} * ... * I_t^{a_t} is NOT contained in the level ideal. It is
a finite down-set; everything here (enumeration, borders, refinement fills,
covering sets, box regions) manipulates such sets exactly, with integer
numerators over a power-of-p denominator. No floating point anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    BadInputError,
    BadLevelError,
    BudgetExceededError,
    HypothesisViolatedError,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    _dedup,
    frobenius_basis,
    frobenius_power,
    groebner_basis,
    ideal_contains,
    power_containment_index,
    radical_membership,
)

DEFAULT_BUDGET = 10**7


class BudgetCounter:
    """Counts membership evaluations; trips loudly instead of hanging."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def charge(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceededError(
                f"membership-call budget {self.limit} exceeded"
            )


def _as_budget(budget) -> BudgetCounter:
    if budget is None:
        return BudgetCounter(DEFAULT_BUDGET)
    if isinstance(budget, BudgetCounter):
        return budget
    return BudgetCounter(int(budget))


# ---------------------------------------------------------------------------
# Input containers
# ---------------------------------------------------------------------------

class IdealSequence:
    """The tuple I_1, ..., I_t; `principal` when every entry has one generator."""

    __slots__ = ("ring", "entries", "_key")

    def __init__(self, entries):
        entries = tuple(entries)
        if not entries:
            raise BadInputError("need at least one sequence entry")
        ring = entries[0].ring
        for I in entries:
            if not isinstance(I, Ideal):
                raise BadInputError(f"sequence entry is not an ideal: {I!r}")
            if I.ring != ring:
                raise BadInputError("sequence entries live in different rings")
            if I.is_zero:
                raise BadInputError("sequence entries must be nonzero ideals")
        self.ring = ring
        self.entries = entries
        self._key = None

    @property
    def t(self) -> int:
        return len(self.entries)

    @property
    def principal(self) -> bool:
        return all(I.num_gens == 1 for I in self.entries)

    def generator_counts(self) -> tuple:
        return tuple(I.num_gens for I in self.entries)

    def truncated(self) -> "IdealSequence":
        """Drop the last entry (needs t >= 2)."""
        if self.t < 2:
            raise BadInputError("cannot truncate a length-1 sequence")
        return IdealSequence(self.entries[:-1])

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(I.key() for I in self.entries)
        return self._key

    def __repr__(self):
        return f"IdealSequence{self.entries!r}"


class PFamily:
    """A p-family of reference ideals: Frobenius powers of a fixed ideal, or
    explicitly listed levels J_{p^0}, J_{p^1}, ... (contiguous from 0)."""

    __slots__ = ("ring", "kind", "base", "levels", "_key")

    def __init__(self, ring, kind, base, levels):
        self.ring = ring
        self.kind = kind
        self.base = base
        self.levels = levels
        self._key = None

    @classmethod
    def frobenius(cls, J: Ideal) -> "PFamily":
        if J.is_zero:
            raise BadInputError("reference ideal must be nonzero")
        return cls(J.ring, "frobenius", J, None)

    @classmethod
    def explicit(cls, level_ideals, pres=None) -> "PFamily":
        """Explicit levels as a list of ideals for e = 0, 1, 2, ...

        The defining containment J_{p^e}^[p] within J_{p^{e+1}} is checked for
        every consecutive pair provided, in the presented ring when a
        presentation is given.
        """
        level_ideals = tuple(level_ideals)
        if not level_ideals:
            raise BadInputError("explicit family needs at least level 0")
        ring = level_ideals[0].ring
        p = ring.p
        for a, b in zip(level_ideals, level_ideals[1:]):
            if not ideal_contains(frobenius_power(a, p), b, pres):
                raise BadInputError(
                    "not a p-family: bracket p-th power of one level "
                    "is not contained in the next"
                )
        return cls(ring, "explicit", None, level_ideals)

    @property
    def p(self) -> int:
        return self.ring.p

    def level_ideal(self, e: int) -> Ideal:
        if e < 0:
            raise BadLevelError(f"negative level {e}")
        if self.kind == "frobenius":
            return frobenius_power(self.base, self.p ** e)
        if e >= len(self.levels):
            raise BadLevelError(
                f"level {e} not provided (explicit family has levels 0..{len(self.levels) - 1})"
            )
        return self.levels[e]

    def level_basis(self, e: int, pres=None) -> GroebnerBasis:
        if self.kind == "frobenius":
            if e < 0:
                raise BadLevelError(f"negative level {e}")
            return frobenius_basis(self.base, self.p ** e, pres)
        return groebner_basis(self.level_ideal(e), pres)

    def base_level(self) -> Ideal:
        """J_{p^0}, the reference for the radical hypothesis and bounds."""
        return self.level_ideal(0)

    def key(self) -> tuple:
        if self._key is None:
            if self.kind == "frobenius":
                self._key = ("frobenius", self.base.key())
            else:
                self._key = ("explicit", tuple(J.key() for J in self.levels))
        return self._key

    def __repr__(self):
        if self.kind == "frobenius":
            return f"PFamily.frobenius({self.base!r})"
        return f"PFamily.explicit({list(self.levels)!r})"


# ---------------------------------------------------------------------------
# Hypothesis checks and finiteness bounds
# ---------------------------------------------------------------------------

_HYPOTHESIS_OK: set = set()
_AXIS_CACHE: dict = {}


def _pres_key(pres) -> tuple:
    return pres.key() if pres is not None else ()


def check_hypothesis(seq: IdealSequence, fam: PFamily, pres=None):
    """Validate that every sequence generator lies in the radical of J_{p^0}.

    Raises HypothesisViolatedError naming the offending generator. Also
    rejects a unit reference ideal (escape sets need a proper target).
    """
    tag = (seq.key(), fam.key(), _pres_key(pres))
    if tag in _HYPOTHESIS_OK:
        return
    J0 = fam.base_level()
    if groebner_basis(J0, pres).contains_one:
        raise HypothesisViolatedError("reference ideal must be proper")
    for n, I in enumerate(seq.entries):
        for g in I.gens:
            if not radical_membership(g, J0, pres):
                raise HypothesisViolatedError(
                    f"generator {g} of sequence entry {n + 1} is not in the "
                    f"radical of the level-0 reference ideal"
                )
    _HYPOTHESIS_OK.add(tag)


def containment_exponents(seq: IdealSequence, fam: PFamily, pres=None, cap: int = 512) -> tuple:
    """Per-entry least l with I_n^l inside J_{p^0}; drives all finiteness bounds."""
    tag = (seq.key(), fam.key(), _pres_key(pres), cap)
    hit = _AXIS_CACHE.get(tag)
    if hit is None:
        J0 = fam.base_level()
        hit = tuple(
            power_containment_index(I, J0, pres, cap=cap) for I in seq.entries
        )
        _AXIS_CACHE[tag] = hit
    return hit


def axis_bounds(seq: IdealSequence, fam: PFamily, e: int, pres=None, cap: int = 512) -> tuple:
    """Exclusive per-axis bounds mu_n * l_n * p^e on escape-set coordinates."""
    ells = containment_exponents(seq, fam, pres, cap)
    q = fam.p ** e
    return tuple(mu * ell * q for mu, ell in zip(seq.generator_counts(), ells))


# ---------------------------------------------------------------------------
# Membership machinery
# ---------------------------------------------------------------------------

class _EscapeContext:
    """Reduced-power caches for one (sequence, family, level, presentation).

    Entry powers are kept as deduplicated nonzero normal forms; an empty list
    means the power is contained in the level ideal (and stays so above).
    """

    __slots__ = ("seq", "basis", "pows", "gens_nf")

    def __init__(self, seq: IdealSequence, basis: GroebnerBasis):
        self.seq = seq
        self.basis = basis
        one_nf = basis.reduce(seq.ring.one())
        start = [one_nf] if not one_nf.is_zero else []
        self.gens_nf = []
        self.pows = []
        for I in seq.entries:
            nf = _dedup(basis.reduce(g) for g in I.gens)
            self.gens_nf.append(nf)
            self.pows.append([tuple(start)])

    def entry_power(self, i: int, k: int) -> tuple:
        cache = self.pows[i]
        while len(cache) <= k:
            prev = cache[-1]
            if not prev:
                cache.append(())
                continue
            cache.append(_dedup(self.basis.reduce(u * v) for u in prev for v in self.gens_nf[i]))
        return cache[k]

    def combine(self, left, right) -> tuple:
        """Nonzero normal forms of pairwise products, deduplicated."""
        if not left or not right:
            return ()
        return _dedup(self.basis.reduce(u * v) for u in left for v in right)


_CONTEXT_CACHE: dict = {}


def _context(seq: IdealSequence, fam: PFamily, e: int, pres=None) -> _EscapeContext:
    tag = (seq.key(), fam.key(), e, _pres_key(pres))
    ctx = _CONTEXT_CACHE.get(tag)
    if ctx is None:
        basis = fam.level_basis(e, pres)
        if basis.contains_one:
            raise HypothesisViolatedError(
                f"level-{e} reference ideal is the unit ideal in the quotient"
            )
        ctx = _EscapeContext(seq, basis)
        _CONTEXT_CACHE[tag] = ctx
    return ctx


def escapes(point, seq: IdealSequence, fam: PFamily, e: int, pres=None, budget=None) -> bool:
    """True iff the product ideal at `point` is NOT contained in the level ideal."""
    point = tuple(point)
    if len(point) != seq.t:
        raise BadInputError(f"point arity {len(point)} != sequence length {seq.t}")
    if any(a < 0 for a in point):
        raise BadInputError(f"negative exponent in {point}")
    check_hypothesis(seq, fam, pres)
    counter = _as_budget(budget)
    ctx = _context(seq, fam, e, pres)
    counter.charge()
    acc = ctx.entry_power(0, point[0])
    for i in range(1, seq.t):
        if not acc:
            return False
        acc = ctx.combine(acc, ctx.entry_power(i, point[i]))
    return bool(acc)


# ---------------------------------------------------------------------------
# Down-sets
# ---------------------------------------------------------------------------

class DownSet:
    """A finite down-closed subset of N^t, stored by its maximal points."""

    __slots__ = ("dimension", "level", "p", "max_points", "size", "positive_size")

    def __init__(self, dimension, level, p, max_points, size, positive_size):
        self.dimension = dimension
        self.level = level
        self.p = p
        self.max_points = tuple(sorted(max_points))
        self.size = size
        self.positive_size = positive_size

    @classmethod
    def from_max_points(cls, dimension, level, p, max_points) -> "DownSet":
        """Build from an antichain, counting by explicit expansion (small sets)."""
        pts = _expand_down_set(max_points)
        pos = sum(1 for a in pts if all(x >= 1 for x in a))
        return cls(dimension, level, p, _antichain(max_points), len(pts), pos)

    def __contains__(self, point) -> bool:
        point = tuple(point)
        return any(
            all(x <= m for x, m in zip(point, mp)) for mp in self.max_points
        )

    def points(self) -> list:
        """All points, sorted; intended for export and small-instance oracles."""
        return sorted(_expand_down_set(self.max_points))

    def is_empty(self) -> bool:
        return self.size == 0

    def __eq__(self, other):
        return (
            isinstance(other, DownSet)
            and self.dimension == other.dimension
            and self.max_points == other.max_points
        )

    def __hash__(self):
        return hash((self.dimension, self.max_points))

    def __repr__(self):
        return (
            f"DownSet(t={self.dimension}, e={self.level}, size={self.size}, "
            f"max_points={list(self.max_points)})"
        )


def _expand_down_set(max_points) -> set:
    pts = set()
    for mp in max_points:
        pts.update(itertools.product(*(range(m + 1) for m in mp)))
    return pts


def _antichain(points) -> tuple:
    pts = sorted(set(tuple(p) for p in points))
    out = []
    for a in pts:
        if not any(
            b != a and all(x <= y for x, y in zip(a, b)) for b in pts
        ):
            out.append(a)
    return tuple(out)


def escape_set(seq: IdealSequence, fam: PFamily, e: int, pres=None, budget=None) -> DownSet:
    """Enumerate the level-e escape set exactly.

    Depth-first sweep over prefixes; on the last axis the feasible values form
    an interval [0, m] located by binary search, so the work scales with the
    staircase surface rather than its volume.
    """
    check_hypothesis(seq, fam, pres)
    counter = _as_budget(budget)
    ctx = _context(seq, fam, e, pres)
    t = seq.t
    bounds = axis_bounds(seq, fam, e, pres)
    rows: dict = {}

    def last_max(prefix_polys) -> int:
        hi = bounds[t - 1] - 1

        def member(m: int) -> bool:
            counter.charge()
            pw = ctx.entry_power(t - 1, m)
            if not pw:
                return False
            return bool(ctx.combine(prefix_polys, pw))

        if hi <= 0:
            return 0
        if member(hi):
            return hi
        lo = 0  # the prefix itself escapes, so m = 0 is always feasible
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if member(mid):
                lo = mid
            else:
                hi = mid
        return lo

    def sweep(i: int, prefix: tuple, prefix_polys):
        if i == t - 1:
            rows[prefix] = last_max(prefix_polys)
            return
        a = 0
        while a < bounds[i]:
            counter.charge()
            polys = ctx.combine(prefix_polys, ctx.entry_power(i, a))
            if not polys:
                break
            sweep(i + 1, prefix + (a,), polys)
            a += 1

    one_nf = ctx.basis.reduce(seq.ring.one())
    sweep(0, (), (one_nf,))

    size = sum(m + 1 for m in rows.values())
    positive = sum(
        m for prefix, m in rows.items() if all(x >= 1 for x in prefix)
    )
    max_points = []
    for prefix, m in rows.items():
        if all(
            rows.get(prefix[:i] + (prefix[i] + 1,) + prefix[i + 1:], -1) < m
            for i in range(t - 1)
        ):
            max_points.append(prefix + (m,))
    return DownSet(t, e, fam.p, max_points, size, positive)


def positive_point_count(ds: DownSet) -> int:
    """Number of escape-set points with every coordinate >= 1."""
    return ds.positive_size


# ---------------------------------------------------------------------------
# Scaled point sets, borders, refinement fills
# ---------------------------------------------------------------------------

class ScaledPointSet:
    """A finite subset of (1/p^level) N^t stored as integer numerators."""

    __slots__ = ("dimension", "level", "points")

    def __init__(self, dimension: int, level: int, points):
        self.dimension = dimension
        self.level = level
        self.points = frozenset(tuple(pt) for pt in points)

    def __contains__(self, pt) -> bool:
        return tuple(pt) in self.points

    def __len__(self):
        return len(self.points)

    def sorted_points(self) -> list:
        return sorted(self.points)

    def union(self, other: "ScaledPointSet") -> "ScaledPointSet":
        if other.level != self.level or other.dimension != self.dimension:
            raise BadInputError("scaled sets at different levels cannot be merged")
        return ScaledPointSet(self.dimension, self.level, self.points | other.points)

    def translates(self, steps: int) -> "ScaledPointSet":
        """Union of shifts by k*(1,...,1)/p^level for k = 0..steps."""
        pts = set()
        for k in range(steps + 1):
            for pt in self.points:
                pts.add(tuple(x + k for x in pt))
        return ScaledPointSet(self.dimension, self.level, pts)

    def __eq__(self, other):
        return (
            isinstance(other, ScaledPointSet)
            and self.dimension == other.dimension
            and self.level == other.level
            and self.points == other.points
        )

    def __hash__(self):
        return hash((self.dimension, self.level, self.points))

    def __repr__(self):
        return f"ScaledPointSet(t={self.dimension}, e={self.level}, n={len(self.points)})"


def scaled_points(ds: DownSet) -> ScaledPointSet:
    """The down-set as numerators over p^level."""
    return ScaledPointSet(ds.dimension, ds.level, ds.points())


def border_points(C: ScaledPointSet) -> ScaledPointSet:
    """Points x of C whose diagonal successor x + (1/p^level)(1,...,1) left C."""
    pts = C.points
    out = {x for x in pts if tuple(v + 1 for v in x) not in pts}
    return ScaledPointSet(C.dimension, C.level, out)


def fill_refinement(C: ScaledPointSet, extra: int, p: int) -> ScaledPointSet:
    """Refine each point x into the finer-lattice block (x - 1/p^level, x].

    The result lives at denominator p^(level+extra); a numerator n_i qualifies
    when  x_i*p^extra - p^extra < n_i <= x_i*p^extra  and n_i >= 0.
    """
    if extra < 0:
        raise BadInputError("refinement depth must be nonnegative")
    step = p ** extra
    pts = set()
    for x in C.points:
        ranges = [
            range(max(0, v * step - step + 1), v * step + 1) for v in x
        ]
        pts.update(itertools.product(*ranges))
    return ScaledPointSet(C.dimension, C.level + extra, pts)


def base_slabs(seq: IdealSequence, fam: PFamily, e1: int, pres=None, cap: int = 512) -> ScaledPointSet:
    """The coordinate-hyperplane slabs: for each axis j, points with the j-th
    numerator 0 and the others within the finiteness box."""
    ells = containment_exponents(seq, fam, pres, cap)
    mus = seq.generator_counts()
    q = fam.p ** e1
    t = seq.t
    pts = set()
    for j in range(t):
        ranges = []
        for i in range(t):
            if i == j:
                ranges.append(range(0, 1))
            else:
                ranges.append(range(0, mus[i] * ells[i] * q + 1))
        pts.update(itertools.product(*ranges))
    return ScaledPointSet(t, e1, pts)


def covering_sets(seq: IdealSequence, fam: PFamily, e1: int, e2: int, pres=None,
                  budget=None) -> tuple:
    """The two refinement covers of the level-(e1+e2) escape set.

    The first fills the level-e1 escape set itself; the second fills the
    diagonally padded border of the escape set extended by the axis slabs.
    Their union provably contains the refined escape set.
    """
    counter = _as_budget(budget)
    V = escape_set(seq, fam, e1, pres, counter)
    p = fam.p
    Vp = scaled_points(V)
    C = Vp.union(base_slabs(seq, fam, e1, pres))
    mu = max(seq.generator_counts())
    R_set = fill_refinement(Vp, e2, p)
    L_set = fill_refinement(border_points(C).translates(mu), e2, p)
    return R_set, L_set


class CoverCheck:
    """Boolean verdict that carries a witness point when false."""

    __slots__ = ("ok", "witness")

    def __init__(self, ok: bool, witness=None):
        self.ok = ok
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"CoverCheck(ok={self.ok}, witness={self.witness})"


def verify_cover(seq: IdealSequence, fam: PFamily, e1: int, e2: int, pres=None,
                 budget=None) -> CoverCheck:
    """Check that the level-(e1+e2) escape set sits inside the two covers.

    This is a theorem; a false verdict signals an implementation bug and
    carries the uncovered numerator tuple.
    """
    counter = _as_budget(budget)
    R_set, L_set = covering_sets(seq, fam, e1, e2, pres, counter)
    V_top = escape_set(seq, fam, e1 + e2, pres, counter)
    for pt in V_top.points():
        if pt not in R_set.points and pt not in L_set.points:
            return CoverCheck(False, pt)
    return CoverCheck(True, None)


# ---------------------------------------------------------------------------
# Box regions and volumes
# ---------------------------------------------------------------------------

class BoxRegion:
    """Union of boxes [0, a_1/p^e] x ... x [0, a_t/p^e] over corner points a."""

    __slots__ = ("dimension", "level", "p", "corners", "_positive")

    def __init__(self, dimension, level, p, corners, positive=None):
        self.dimension = dimension
        self.level = level
        self.p = p
        self.corners = tuple(sorted(_antichain(corners)))
        self._positive = positive

    def positive_cube_count(self) -> int:
        """Number of unit cells with strictly positive upper corner inside the region."""
        if self._positive is None:
            pts = _expand_down_set(self.corners)
            self._positive = sum(1 for a in pts if all(x >= 1 for x in a))
        return self._positive

    def __repr__(self):
        return f"BoxRegion(t={self.dimension}, e={self.level}, corners={list(self.corners)})"


def box_region(ds: DownSet) -> BoxRegion:
    return BoxRegion(ds.dimension, ds.level, ds.p, ds.max_points, ds.positive_size)


def region_volume(region: BoxRegion) -> Fraction:
    """Exact volume by cube counting: cells/(p^e)^t, never floating point."""
    denom = (region.p ** region.level) ** region.dimension
    return Fraction(region.positive_cube_count(), denom)


# ---------------------------------------------------------------------------
# Exports: CSV and SVG staircases
# ---------------------------------------------------------------------------

def downset_csv(downsets) -> str:
    """CSV with one lattice point per row. Columns: e, a1..at (exact integers)."""
    if isinstance(downsets, DownSet):
        downsets = [downsets]
    downsets = list(downsets)
    if not downsets:
        raise BadInputError("nothing to export")
    t = downsets[0].dimension
    lines = ["e," + ",".join(f"a{i + 1}" for i in range(t))]
    for ds in downsets:
        if ds.dimension != t:
            raise BadInputError("mixed dimensions in one CSV export")
        for pt in ds.points():
            lines.append(f"{ds.level}," + ",".join(str(x) for x in pt))
    return "\n".join(lines) + "\n"


def box_region_csv(regions) -> str:
    """CSV of box-region corner points. Columns: e, a1..at."""
    if isinstance(regions, BoxRegion):
        regions = [regions]
    regions = list(regions)
    if not regions:
        raise BadInputError("nothing to export")
    t = regions[0].dimension
    lines = ["e," + ",".join(f"a{i + 1}" for i in range(t))]
    for br in regions:
        for pt in br.corners:
            lines.append(f"{br.level}," + ",".join(str(x) for x in pt))
    return "\n".join(lines) + "\n"


_SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")


def _staircase_path(region: BoxRegion) -> list:
    """Vertices of the upper-right boundary polyline, as exact fractions."""
    q = region.p ** region.level
    corners = sorted(region.corners)  # ascending first coordinate, descending second
    if not corners:
        return [(Fraction(0), Fraction(0))]
    path = [(Fraction(0), Fraction(corners[0][1], q))]
    prev_x = None
    for a, b in corners:
        x, y = Fraction(a, q), Fraction(b, q)
        if prev_x is not None:
            path.append((prev_x, y))  # drop down at the previous corner
        path.append((x, y))
        prev_x = x
    path.append((prev_x, Fraction(0)))
    return [pt for i, pt in enumerate(path) if i == 0 or pt != path[i - 1]]


def staircase_svg(regions, px_per_unit: int = 240) -> str:
    """SVG overlay of staircase outlines, one color per level (2d only).

    Coordinates are exact fractions scaled by `px_per_unit` and emitted with
    three decimals; output is byte-stable across runs.
    """
    if isinstance(regions, BoxRegion):
        regions = [regions]
    regions = sorted(regions, key=lambda r: r.level)
    if not regions:
        raise BadInputError("nothing to draw")
    if any(r.dimension != 2 for r in regions):
        raise BadInputError("staircase SVG export is two-dimensional only")
    extent = Fraction(0)
    for r in regions:
        q = r.p ** r.level
        for a, b in r.corners:
            extent = max(extent, Fraction(a, q), Fraction(b, q))
    extent = max(extent + Fraction(1, 4), Fraction(1))
    margin = 20
    side = int(extent * px_per_unit) + 2 * margin

    def px(v: Fraction) -> str:
        return f"{float(v * px_per_unit + margin):.3f}"

    def py(v: Fraction) -> str:
        return f"{float((extent - v) * px_per_unit + margin):.3f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f'<line x1="{px(Fraction(0))}" y1="{py(Fraction(0))}" x2="{px(extent)}" '
        f'y2="{py(Fraction(0))}" stroke="#444444" stroke-width="1"/>',
        f'<line x1="{px(Fraction(0))}" y1="{py(Fraction(0))}" x2="{px(Fraction(0))}" '
        f'y2="{py(extent)}" stroke="#444444" stroke-width="1"/>',
    ]
    for idx, region in enumerate(regions):
        color = _SVG_COLORS[idx % len(_SVG_COLORS)]
        pts = " ".join(f"{px(x)},{py(y)}" for x, y in _staircase_path(region))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="2"><title>e={region.level}</title></polyline>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
