"""Exact arithmetic layer: prime fields, monomial orders, sparse polynomials.

Monomials are plain tuples of nonnegative ints, one entry per ring variable;
a polynomial is an immutable sparse map from monomial to nonzero coefficient
in F_p. All values are hashable and safe to share once constructed.
"""

from __future__ import annotations

import re

from .errors import (
    ExponentOverflowError,
    NonPrimeError,
    PolyParseError,
    RingMismatchError,
)

MAX_EXPONENT = 2**63 - 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The prime field F_p, 2 <= p < 2^31. Elements are canonical ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < 2**31 or not is_prime(p):
            raise NonPrimeError(f"characteristic must be a prime in [2, 2^31): {p!r}")
        self.p = p

    def __call__(self, value: int) -> "FpElement":
        return FpElement(value % self.p, self)

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class FpElement:
    """A residue in F_p with an explicit modulus; arithmetic stays canonical."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other) -> "FpElement":
        if isinstance(other, FpElement):
            if other.field != self.field:
                raise RingMismatchError(
                    f"mixed moduli {self.field.p} and {other.field.p}"
                )
            return other
        if isinstance(other, int):
            return FpElement(other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value + other.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value - other.value, self.field)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(other.value - self.value, self.field)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.value * other.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def inverse(self) -> "FpElement":
        return FpElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __repr__(self):
        return f"{self.value} mod {self.field.p}"


# ---------------------------------------------------------------------------
# Monomials: exponent tuples with checked addition
# ---------------------------------------------------------------------------

def mono_mul(a: tuple, b: tuple) -> tuple:
    out = tuple(x + y for x, y in zip(a, b))
    if out and max(out) > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent beyond 2^63-1 in {out}")
    return out


def mono_divides(a: tuple, b: tuple) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: tuple, a: tuple) -> tuple:
    """Quotient exponent b - a; requires divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: tuple) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Total order on exponent tuples, compatible with multiplication, 1 minimal.

    Concrete orders expose `key(mono)`; larger key means larger monomial.
    """

    name = "abstract"

    def __init__(self, nvars: int):
        self.nvars = nvars

    def key(self, mono: tuple):
        raise NotImplementedError

    def _signature(self):
        return (self.name, self.nvars)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars})"


class Lex(MonomialOrder):
    name = "lex"

    def key(self, mono: tuple):
        return mono


class GRevLex(MonomialOrder):
    name = "grevlex"

    def key(self, mono: tuple):
        return (sum(mono),) + tuple(-e for e in reversed(mono))


class EliminationOrder(MonomialOrder):
    """Block order: the first `naux` variables dominate, inner order breaks ties.

    Any monomial involving an auxiliary variable beats every one that does not,
    so intersecting a Groebner basis with the inner ring eliminates the block.
    """

    name = "elim"

    def __init__(self, naux: int, inner: MonomialOrder):
        super().__init__(naux + inner.nvars)
        self.naux = naux
        self.inner = inner

    def key(self, mono: tuple):
        aux = mono[: self.naux]
        return (sum(aux),) + tuple(-e for e in reversed(aux)) + (self.inner.key(mono[self.naux:]),)

    def _signature(self):
        return (self.name, self.naux, self.inner._signature())


def make_order(kind: str, nvars: int) -> MonomialOrder:
    if kind == "lex":
        return Lex(nvars)
    if kind == "grevlex":
        return GRevLex(nvars)
    raise ValueError(f"unknown monomial order {kind!r}")


# ---------------------------------------------------------------------------
# Polynomial ring and polynomials
# ---------------------------------------------------------------------------

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class PolynomialRing:
    """F_p[x_1, ..., x_n] with a fixed monomial order."""

    __slots__ = ("field", "variables", "order", "_var_index", "_one", "_zero")

    def __init__(self, p, variables, order="grevlex"):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        variables = tuple(variables)
        if not variables:
            raise ValueError("need at least one variable")
        for v in variables:
            if not _IDENT_RE.fullmatch(v):
                raise ValueError(f"bad variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable in {variables}")
        self.variables = variables
        if isinstance(order, str):
            order = make_order(order, len(variables))
        if order.nvars != len(variables):
            raise ValueError("order arity does not match variable count")
        self.order = order
        self._var_index = {v: i for i, v in enumerate(variables)}
        self._zero = None
        self._one = None

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        if self._zero is None:
            self._zero = Polynomial(self, {})
        return self._zero

    def one(self) -> "Polynomial":
        if self._one is None:
            self._one = Polynomial(self, {(0,) * self.nvars: 1})
        return self._one

    def gens(self) -> tuple:
        out = []
        for i in range(self.nvars):
            exps = [0] * self.nvars
            exps[i] = 1
            out.append(Polynomial(self, {tuple(exps): 1}))
        return tuple(out)

    def monomial(self, exps, coeff: int = 1) -> "Polynomial":
        return self.from_dict({tuple(exps): coeff})

    def constant(self, c: int) -> "Polynomial":
        return self.from_dict({(0,) * self.nvars: c})

    def from_dict(self, raw: dict) -> "Polynomial":
        """Canonicalize a raw exponent->int map: reduce mod p, drop zeros."""
        p = self.p
        out = {}
        for mono, c in raw.items():
            mono = tuple(mono)
            if len(mono) != self.nvars:
                raise ValueError(f"monomial arity {len(mono)} != {self.nvars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            if mono and max(mono) > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent beyond 2^63-1 in {mono}")
            c %= p
            if c:
                cur = out.get(mono, 0)
                cur = (cur + c) % p
                if cur:
                    out[mono] = cur
                elif mono in out:
                    del out[mono]
        return Polynomial(self, out)

    def poly(self, text: str, line: int = 1, column: int = 1) -> "Polynomial":
        return parse_polynomial(text, self, line=line, column=column)

    def with_order(self, order) -> "PolynomialRing":
        if isinstance(order, str):
            order = make_order(order, self.nvars)
        return PolynomialRing(self.field, self.variables, order)

    def extended(self, aux_names) -> "PolynomialRing":
        """Ring with auxiliary variables prepended under an elimination order."""
        aux_names = tuple(aux_names)
        for v in aux_names:
            if v in self._var_index:
                raise ValueError(f"auxiliary name {v!r} collides with a ring variable")
        return PolynomialRing(
            self.field,
            aux_names + self.variables,
            EliminationOrder(len(aux_names), self.order),
        )

    def inject(self, f: "Polynomial", extended: "PolynomialRing") -> "Polynomial":
        """Image of f in `extended` (extra leading variables set to exponent 0)."""
        pad = extended.nvars - self.nvars
        return Polynomial(extended, {(0,) * pad + m: c for m, c in f.coeffs.items()})

    def project(self, f: "Polynomial", extended: "PolynomialRing") -> "Polynomial":
        """Preimage of an auxiliary-free polynomial of `extended` in this ring."""
        pad = extended.nvars - self.nvars
        out = {}
        for m, c in f.coeffs.items():
            if any(m[:pad]):
                raise ValueError("polynomial involves auxiliary variables")
            out[m[pad:]] = c
        return Polynomial(self, out)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field.p, self.variables, self.order._signature()))

    def __repr__(self):
        return f"F_{self.p}[{', '.join(self.variables)}] ({self.order.name})"


def _fresh_aux_name(ring: PolynomialRing, base: str = "w") -> str:
    name = base
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{base}{k}"
    return name


class Polynomial:
    """Immutable sparse polynomial over a PolynomialRing.

    `coeffs` maps exponent tuples to nonzero ints in [1, p); construction via
    `PolynomialRing.from_dict` canonicalizes, the constructor itself trusts
    its input.
    """

    __slots__ = ("ring", "coeffs", "_hash", "_maxexp")

    def __init__(self, ring: PolynomialRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs
        self._hash = None
        self._maxexp = max((max(m) for m in coeffs), default=0) if ring.nvars else 0

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def terms_desc(self) -> list:
        """Terms as (monomial, coeff), descending in the ring's order."""
        key = self.ring.order.key
        return sorted(self.coeffs.items(), key=lambda t: key(t[0]), reverse=True)

    def leading(self) -> tuple:
        """(monomial, coeff) of the leading term; undefined on zero."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading term")
        key = self.ring.order.key
        m = max(self.coeffs, key=key)
        return m, self.coeffs[m]

    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(m) for m in self.coeffs)

    def key(self) -> tuple:
        """Canonical hashable content key (monomials sorted ascending)."""
        return tuple(sorted(self.coeffs.items()))

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"mixed rings {self.ring} and {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        p = self.ring.p
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {m: (v * c) % self.ring.p for m, v in self.coeffs.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        if not self.coeffs or not other.coeffs:
            return self.ring.zero()
        p = self.ring.p
        checked = self._maxexp + other._maxexp > MAX_EXPONENT
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                if checked and max(m) > MAX_EXPONENT:
                    raise ExponentOverflowError(f"exponent beyond 2^63-1 in {m}")
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: v % p for m, v in out.items() if v % p})

    __rmul__ = __mul__

    def frobenius(self, q: int) -> "Polynomial":
        """Image under x_i -> x_i^q; equals self**q when q is a power of p."""
        if q == 1:
            return self
        if self._maxexp * q > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent beyond 2^63-1 scaling by {q}")
        return Polynomial(self.ring, {tuple(e * q for e in m): c for m, c in self.coeffs.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative int: {k!r}")
        if k == 0:
            return self.ring.one()
        # peel off the characteristic: f^(p^e * m) = frobenius(f, p^e)^m
        p = self.ring.p
        q = 1
        while k % p == 0:
            k //= p
            q *= p
        base = self.frobenius(q)
        result = None
        sq = base
        while k:
            if k & 1:
                result = sq if result is None else result * sq
            k >>= 1
            if k:
                sq = sq * sq
        return result

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        _, lc = self.leading()
        if lc == 1:
            return self
        return self * self.ring.field.inv(lc)

    # -- comparisons / printing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.p, self.ring.variables, self.key()))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        names = self.ring.variables
        parts = []
        for mono, c in self.terms_desc():
            factors = []
            if c != 1 or not any(mono):
                factors.append(str(c))
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} over F_{self.ring.p}>"


# ---------------------------------------------------------------------------
# Text grammar: ident, int literals, + - * ^; no juxtaposition
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^]))")


def _tokenize(text: str, line: int, column: int):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise PolyParseError(f"unexpected character {rest[0]!r}", line, column + pos)
        col = column + m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), col))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, ring: PolynomialRing, line: int = 1, column: int = 1) -> Polynomial:
    """Parse `text` into a canonical polynomial of `ring`.

    Grammar: poly := ['-'] term (('+'|'-') term)*;
             term := factor ('*' factor)*;
             factor := INT | IDENT ['^' INT].
    """
    tokens = _tokenize(text, line, column)
    if not tokens:
        raise PolyParseError("empty polynomial", line, column)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, column + len(text))

    def factor():
        nonlocal pos
        kind, value, col = peek()
        if kind == "num":
            pos += 1
            return {(0,) * ring.nvars: int(value)}
        if kind == "ident":
            idx = ring._var_index.get(value)
            if idx is None:
                raise PolyParseError(f"unknown variable {value!r}", line, col)
            pos += 1
            exp = 1
            kind2, value2, col2 = peek()
            if kind2 == "op" and value2 == "^":
                pos += 1
                kind3, value3, col3 = peek()
                if kind3 != "num":
                    raise PolyParseError("expected integer exponent after '^'", line, col3)
                exp = int(value3)
                if exp > MAX_EXPONENT:
                    raise PolyParseError("exponent beyond 2^63-1", line, col3)
                pos += 1
            exps = [0] * ring.nvars
            exps[idx] = exp
            return {tuple(exps): 1}
        raise PolyParseError("expected a variable or integer", line, col)

    def term():
        nonlocal pos
        acc = factor()
        while True:
            kind, value, col = peek()
            if kind == "op" and value == "*":
                pos += 1
                nxt = factor()
                out = {}
                for m1, c1 in acc.items():
                    for m2, c2 in nxt.items():
                        out[mono_mul(m1, m2)] = c1 * c2
                acc = out
            elif kind in ("num", "ident"):
                raise PolyParseError("missing operator (juxtaposition not allowed)", line, col)
            else:
                return acc

    raw = {}

    def absorb(d, sign):
        for m, c in d.items():
            raw[m] = raw.get(m, 0) + sign * c

    sign = 1
    kind, value, _ = peek()
    if kind == "op" and value in "+-":
        sign = -1 if value == "-" else 1
        pos += 1
    absorb(term(), sign)
    while pos < len(tokens):
        kind, value, col = peek()
        if kind != "op" or value not in "+-":
            raise PolyParseError(f"expected '+' or '-', got {value!r}", line, col)
        pos += 1
        absorb(term(), -1 if value == "-" else 1)
    return ring.from_dict(raw)
