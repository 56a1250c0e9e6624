"""Numerical invariants and exact per-level identity/inequality checkers.

Estimators report finite tables of exact rationals, never an extrapolated
limit: when every computed row agrees the table is flagged "stabilized (not
a proof)". Checkers compare exact values; the relations they test are
theorems, so a false verdict is an implementation bug and carries a witness.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial

from .errors import (
    BadInputError,
    HypothesisViolatedError,
    NotPrimaryError,
    TheoremViolationError,
)
from .groebner import (
    Ideal,
    frobenius_basis,
    frobenius_power,
    ideal_contains,
    ideal_intersection,
    ideal_sum,
    krull_dimension,
    staircase_count_of,
    standard_monomial_count,
)
from .regions import (
    IdealSequence,
    PFamily,
    _as_budget,
    axis_bounds,
    check_hypothesis,
    containment_exponents,
    escape_set,
)


def _fraction_json(v: Fraction) -> dict:
    return {"num": str(v.numerator), "den": str(v.denominator)}


class EstimateTable:
    """Finite table of per-level exact rationals with convergence metadata."""

    __slots__ = ("kind", "p", "t", "rows", "tilde_rows", "flags")

    def __init__(self, kind, p, t, rows, tilde_rows=None, flags=None):
        self.kind = kind
        self.p = p
        self.t = t
        self.rows = sorted(rows)
        self.tilde_rows = sorted(tilde_rows) if tilde_rows is not None else None
        self.flags = dict(flags) if flags else {}

    def value(self, e: int) -> Fraction:
        for level, v in self.rows:
            if level == e:
                return v
        raise KeyError(f"no row for level {e}")

    def to_jsonable(self) -> dict:
        out = {
            "kind": self.kind,
            "p": self.p,
            "t": self.t,
            "rows": [dict(e=e, **_fraction_json(v)) for e, v in self.rows],
            "flags": self.flags,
        }
        if self.tilde_rows is not None:
            out["rows_tilde"] = [dict(e=e, **_fraction_json(v)) for e, v in self.tilde_rows]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":")) + "\n"

    def __repr__(self):
        cells = ", ".join(f"e={e}: {v}" for e, v in self.rows)
        return f"EstimateTable[{self.kind}]({cells})"


class NuValue:
    """The largest power of I escaping the e-th bracket power of J."""

    __slots__ = ("e", "nu")

    def __init__(self, e: int, nu: int):
        self.e = e
        self.nu = nu

    def __eq__(self, other):
        if isinstance(other, NuValue):
            return (self.e, self.nu) == (other.e, other.nu)
        if isinstance(other, int):
            return self.nu == other
        return NotImplemented

    def __hash__(self):
        return hash((self.e, self.nu))

    def __repr__(self):
        return f"NuValue(e={self.e}, nu={self.nu})"


class CheckReport:
    """Outcome of one identity/inequality checker, with exact sides."""

    __slots__ = ("name", "params", "left", "right", "ok", "witness", "table")

    def __init__(self, name, params, left, right, ok, witness=None, table=None):
        self.name = name
        self.params = dict(params)
        self.left = str(left)
        self.right = str(right)
        self.ok = bool(ok)
        self.witness = witness
        self.table = table

    def __bool__(self):
        return self.ok

    def to_jsonable(self) -> dict:
        out = {
            "check": self.name,
            "params": self.params,
            "left": self.left,
            "right": self.right,
            "ok": self.ok,
            "witness": None if self.witness is None else str(self.witness),
        }
        if self.table is not None:
            out["table"] = self.table
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":")) + "\n"

    def __repr__(self):
        verdict = "ok" if self.ok else f"FAILED (witness={self.witness})"
        return f"CheckReport[{self.name}] {self.left} vs {self.right}: {verdict}"


# ---------------------------------------------------------------------------
# nu and the threshold table
# ---------------------------------------------------------------------------

_BIG_BOUND = 4096


def nu(I: Ideal, J: Ideal, e: int, pres=None, cap: int = 512, budget=None) -> NuValue:
    """Largest k with I^k escaping J^[p^e], by binary search within the
    finiteness bound (containment is monotone in k)."""
    seq = IdealSequence([I])
    fam = PFamily.frobenius(J)
    check_hypothesis(seq, fam, pres)
    bound = axis_bounds(seq, fam, e, pres, cap)[0]
    if I.num_gens == 1 and bound > _BIG_BOUND:
        # large single-generator searches: direct binary powering, O(log) probes
        f = I.gens[0]
        gb = fam.level_basis(e, pres)

        def member(k: int) -> bool:
            return not gb.reduce(f ** k).is_zero

        lo, hi = 0, bound
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if member(mid):
                lo = mid
            else:
                hi = mid
        return NuValue(e, lo)
    ds = escape_set(seq, fam, e, pres, budget)
    return NuValue(e, ds.max_points[0][0])


def threshold_table(I: Ideal, J: Ideal, levels, pres=None, cap: int = 512,
                    budget=None) -> EstimateTable:
    """Rows (e, nu/p^e); the finite sequence only, no extrapolation."""
    counter = _as_budget(budget)
    p = I.ring.p
    rows = []
    for e in levels:
        value = nu(I, J, e, pres, cap, counter).nu
        rows.append((e, Fraction(value, p ** e)))
    vals = [v for _, v in rows]
    flags = {
        "nondecreasing": all(a <= b for a, b in zip(vals, vals[1:])),
        "stabilized": len(vals) >= 2 and len(set(vals)) == 1,
    }
    if flags["stabilized"]:
        flags["note"] = "stabilized (not a proof)"
    return EstimateTable("threshold", p, 1, rows, flags=flags)


# ---------------------------------------------------------------------------
# Volume tables
# ---------------------------------------------------------------------------

def volume_table(seq: IdealSequence, fam: PFamily, levels, pres=None, cap: int = 512,
                 budget=None) -> EstimateTable:
    """Rows (e, |escape set|/p^{et}) with companion strictly-positive rows.

    Each row also records the exact gap bound between the two counts; over a
    polynomial ring the positive-normalized rows must be nondecreasing, and a
    violation is reported as a bug, not a result.
    """
    counter = _as_budget(budget)
    p = fam.p
    t = seq.t
    rows, tilde_rows, gap_notes = [], [], []
    try:
        for e in levels:
            ds = escape_set(seq, fam, e, pres, counter)
            denom = p ** (e * t)
            rows.append((e, Fraction(ds.size, denom)))
            tilde_rows.append((e, Fraction(ds.positive_size, denom)))
            if t >= 2:
                singles = [
                    escape_set(IdealSequence([I]), fam, e, pres, counter).size
                    for I in seq.entries
                ]
                bound = 0
                for i in range(t):
                    term = 1
                    for j in range(t):
                        if j != i:
                            term *= singles[j]
                    bound += term
            else:
                bound = 1
            gap = ds.size - ds.positive_size
            if gap > bound:
                raise TheoremViolationError(
                    f"escape-set gap {gap} exceeds its bound {bound} at e={e}",
                    witness=(e, gap, bound),
                )
            gap_notes.append({"e": e, "gap": str(gap), "bound": str(bound)})
    except Exception as exc:
        if hasattr(exc, "partial"):
            exc.partial = EstimateTable(
                "volume", p, t, rows, tilde_rows, {"budget_exceeded": True}
            )
        raise
    tvals = [v for _, v in tilde_rows]
    nondecreasing = all(a <= b for a, b in zip(tvals, tvals[1:]))
    if (pres is None or pres.trivial) and not nondecreasing:
        bad = next(
            (tilde_rows[i][0], tilde_rows[i + 1][0])
            for i in range(len(tvals) - 1)
            if tvals[i] > tvals[i + 1]
        )
        raise TheoremViolationError(
            "positive-normalized volume rows decreased over a polynomial ring",
            witness=bad,
        )
    vals = [v for _, v in rows]
    flags = {
        "tilde_nondecreasing": nondecreasing,
        "stabilized": len(vals) >= 2 and len(set(vals)) == 1,
        "gap_bounds": gap_notes,
    }
    if flags["stabilized"]:
        flags["note"] = "stabilized (not a proof)"
    return EstimateTable("volume", p, t, rows, tilde_rows, flags)


# ---------------------------------------------------------------------------
# Hilbert-Kunz tables
# ---------------------------------------------------------------------------

def hilbert_kunz_table(J: Ideal, levels, pres=None, d=None) -> EstimateTable:
    """Rows (e, length(R/(J^[p^e] + presentation)) / p^{ed}), exact.

    `d` defaults to the Krull dimension of the presented ring; finite length
    is required at every level (the graded stand-in for m-primary)."""
    ring = J.ring
    p = ring.p
    if d is None:
        d = krull_dimension(Ideal(ring, ()), pres)
    if d < 0:
        raise BadInputError("presented ring is zero; no Hilbert-Kunz data")
    rows = []
    for e in levels:
        q = p ** e
        lam = staircase_count_of(frobenius_basis(J, q, pres))
        if not lam.is_finite:
            raise NotPrimaryError(
                f"quotient by the level-{e} bracket power has infinite length; "
                "the reference ideal is not primary to the irrelevant maximal ideal"
            )
        rows.append((e, Fraction(int(lam), p ** (e * d))))
    vals = [v for _, v in rows]
    flags = {
        "d": d,
        "stabilized": len(vals) >= 2 and len(set(vals)) == 1,
    }
    if flags["stabilized"]:
        flags["note"] = "stabilized (not a proof)"
    return EstimateTable("hk", p, 1, rows, flags=flags)


# ---------------------------------------------------------------------------
# Fedder criterion (complete-intersection form) and parameter sequences
# ---------------------------------------------------------------------------

def fedder_criterion(f_seq, e: int) -> bool:
    """True iff (f_1 ... f_t)^(p^e - 1) escapes the bracket power of the
    ideal of all variables."""
    f_seq = list(f_seq)
    if not f_seq:
        raise BadInputError("need at least one element")
    ring = f_seq[0].ring
    prod = ring.one()
    for f in f_seq:
        if f.ring != ring:
            raise BadInputError("elements from different rings")
        if f.is_zero:
            return False
        prod = prod * f
    q = ring.p ** e
    h = prod ** (q - 1)
    return any(all(x < q for x in mono) for mono in h.coeffs)


def is_parameter_sequence(f_seq, pres=None) -> bool:
    """True iff adjoining the elements drops Krull dimension by their number."""
    f_seq = list(f_seq)
    if not f_seq or any(f.is_zero for f in f_seq):
        return False
    ring = f_seq[0].ring
    ambient = krull_dimension(Ideal(ring, ()), pres)
    quotient = krull_dimension(Ideal(ring, f_seq), pres)
    return quotient == ambient - len(f_seq)


FPURE_CI_LABEL = "F-pure complete intersection (verified to level {e})"


def fpure_ci_label(f_seq, e_max: int, pres=None, budget=None):
    """The certification label, or None.

    The label asserts only finitely checked facts: volume rows exactly 1 up
    to e_max, the Fedder product test at every level up to e_max, and the
    dimension-drop test. Requires a polynomial ambient ring.
    """
    if pres is not None and not pres.trivial:
        return None
    f_seq = list(f_seq)
    ring = f_seq[0].ring
    if not is_parameter_sequence(f_seq, pres):
        return None
    if not all(fedder_criterion(f_seq, e) for e in range(1, e_max + 1)):
        return None
    m = Ideal(ring, ring.gens())
    seq = IdealSequence([Ideal(ring, (f,)) for f in f_seq])
    try:
        table = volume_table(seq, PFamily.frobenius(m), range(1, e_max + 1), pres, budget=budget)
    except HypothesisViolatedError:
        return None
    if any(v != 1 for _, v in table.rows):
        return None
    return FPURE_CI_LABEL.format(e=e_max)


# ---------------------------------------------------------------------------
# Identity / inequality checkers
# ---------------------------------------------------------------------------

CHECK_NAMES = (
    "frob_shift",
    "containment_monotone",
    "slice_bound",
    "simplex_bound",
    "sup_identity",
    "union_decomposition",
    "hk_length_ineq",
    "level_refinement_bound",
    "pfamily_truncation",
    "threshold_bounds",
)


def check_frob_shift(seq: IdealSequence, J: Ideal, e: int, pres=None, budget=None) -> CheckReport:
    """Escape set against the p-th bracket power at level e equals the
    escape set against the ideal itself at level e+1."""
    counter = _as_budget(budget)
    p = J.ring.p
    left = escape_set(seq, PFamily.frobenius(frobenius_power(J, p)), e, pres, counter)
    right = escape_set(seq, PFamily.frobenius(J), e + 1, pres, counter)
    ok = left.max_points == right.max_points
    witness = None
    if not ok:
        diff = set(left.points()) ^ set(right.points())
        witness = sorted(diff)[0]
    return CheckReport("frob_shift", {"e": e}, left.size, right.size, ok, witness)


def check_containment_monotone(seq: IdealSequence, J: Ideal, bigger: Ideal, e: int,
                               pres=None, budget=None) -> CheckReport:
    """J inside `bigger` forces the escape set of `bigger` inside that of J."""
    if not ideal_contains(J, bigger, pres):
        raise HypothesisViolatedError("containment J within the comparison ideal fails")
    counter = _as_budget(budget)
    ds_a = escape_set(seq, PFamily.frobenius(bigger), e, pres, counter)
    ds_j = escape_set(seq, PFamily.frobenius(J), e, pres, counter)
    witness = next((mp for mp in ds_a.max_points if mp not in ds_j), None)
    ok = witness is None
    return CheckReport("containment_monotone", {"e": e}, ds_a.size, ds_j.size, ok, witness)


def check_slice_bound(seq: IdealSequence, J: Ideal, e: int, pres=None, budget=None) -> CheckReport:
    """The escape set embeds in (truncated escape set) x [0, nu of the last entry]."""
    if seq.t < 2:
        raise HypothesisViolatedError("slice bound needs at least two sequence entries")
    counter = _as_budget(budget)
    fam = PFamily.frobenius(J)
    ds = escape_set(seq, fam, e, pres, counter)
    ds_prefix = escape_set(seq.truncated(), fam, e, pres, counter)
    last_nu = nu(seq.entries[-1], J, e, pres, budget=counter).nu
    witness = None
    for mp in ds.max_points:
        if mp[:-1] not in ds_prefix or mp[-1] > last_nu:
            witness = mp
            break
    ok = witness is None
    return CheckReport(
        "slice_bound", {"e": e},
        ds.size, ds_prefix.size * (last_nu + 1), ok, witness,
    )


def check_simplex_bound(seq: IdealSequence, J: Ideal, e: int, pres=None, budget=None) -> CheckReport:
    """Positive-normalized count is at most (nu of the entry sum / p^e)^t / t!."""
    counter = _as_budget(budget)
    p = J.ring.p
    t = seq.t
    ds = escape_set(seq, PFamily.frobenius(J), e, pres, counter)
    total = nu(ideal_sum(*seq.entries), J, e, pres, budget=counter).nu
    left = Fraction(ds.positive_size, p ** (e * t))
    right = Fraction(total, p ** e) ** t / factorial(t)
    ok = left <= right
    return CheckReport("simplex_bound", {"e": e}, left, right, ok,
                       None if ok else (left, right))


def check_sup_identity(seq: IdealSequence, J: Ideal, e: int, pres=None, budget=None) -> CheckReport:
    """nu of the entry sum equals the largest coordinate sum in the escape set."""
    counter = _as_budget(budget)
    ds = escape_set(seq, PFamily.frobenius(J), e, pres, counter)
    total = nu(ideal_sum(*seq.entries), J, e, pres, budget=counter).nu
    best = max(sum(mp) for mp in ds.max_points)
    ok = total == best
    return CheckReport("sup_identity", {"e": e}, total, best, ok,
                       None if ok else (total, best))


def check_union_decomposition(seq: IdealSequence, parts, e: int, pres=None,
                              budget=None) -> CheckReport:
    """For J = intersection of the parts, the escape set of J is the union of
    the parts' escape sets. Polynomial ambient ring only (bracket powers
    commute with intersections there)."""
    if pres is not None and not pres.trivial:
        raise HypothesisViolatedError("union decomposition needs a polynomial ambient ring")
    parts = list(parts)
    if len(parts) < 2:
        raise HypothesisViolatedError("need at least two ideals to intersect")
    counter = _as_budget(budget)
    J = parts[0]
    for other in parts[1:]:
        J = ideal_intersection(J, other)
    ds_j = escape_set(seq, PFamily.frobenius(J), e, pres, counter)
    union_pts = set()
    for part in parts:
        union_pts.update(escape_set(seq, PFamily.frobenius(part), e, pres, counter).points())
    j_pts = set(ds_j.points())
    ok = union_pts == j_pts
    witness = None if ok else sorted(union_pts ^ j_pts)[0]
    return CheckReport("union_decomposition", {"e": e}, ds_j.size, len(union_pts), ok, witness)


def check_hk_length_inequality(seq: IdealSequence, J: Ideal, e: int, pres=None,
                               budget=None) -> CheckReport:
    """length(R/J^[p^e]) is at most |escape set| * length(R/(I + J^[p^e]))."""
    if not seq.principal:
        raise HypothesisViolatedError("length inequality needs a sequence of elements")
    counter = _as_budget(budget)
    ring = J.ring
    q = ring.p ** e
    Jq = frobenius_power(J, q)
    lam_total = staircase_count_of(frobenius_basis(J, q, pres))
    if not lam_total.is_finite:
        raise NotPrimaryError("reference ideal is not primary to the irrelevant maximal ideal")
    ds = escape_set(seq, PFamily.frobenius(J), e, pres, counter)
    I = ideal_sum(*seq.entries)
    lam_step = standard_monomial_count(ideal_sum(I, Jq), pres)
    left = int(lam_total)
    right = ds.size * int(lam_step)
    ok = left <= right
    return CheckReport("hk_length_ineq", {"e": e}, left, right, ok,
                       None if ok else (left, right))


def check_level_refinement_bound(seq: IdealSequence, fam: PFamily, e: int, e1: int, e2: int,
                                 pres=None, budget=None) -> CheckReport:
    """Refining against the fixed level-e ideal grows the positive-normalized
    count by at most p^{e(t-1)} * u / p^{e1} for the explicit constant u."""
    counter = _as_budget(budget)
    p = fam.p
    t = seq.t
    fixed = PFamily.frobenius(fam.level_ideal(e))
    fine = escape_set(seq, fixed, e1 + e2, pres, counter)
    coarse = escape_set(seq, fixed, e1, pres, counter)
    mus = seq.generator_counts()
    ells = containment_exponents(seq, fam, pres)
    mu = max(mus)
    u = 0
    for n in range(t):
        term = 1
        for j in range(t):
            if j != n:
                term *= mus[j] ** 2 * ells[j] + 1
        u += term
    u *= mu + 1
    left = Fraction(fine.positive_size, p ** ((e1 + e2) * t))
    right = Fraction(coarse.positive_size, p ** (e1 * t)) + Fraction(p ** (e * (t - 1)) * u, p ** e1)
    ok = left <= right
    return CheckReport(
        "level_refinement_bound", {"e": e, "e1": e1, "e2": e2},
        left, right, ok, None if ok else (left, right),
    )


def truncation_table(seq: IdealSequence, fam: PFamily, outer_levels, inner_levels,
                     pres=None, budget=None) -> CheckReport:
    """Diagnostic grid: escape-set size against the fixed level-e ideal at
    inner level e', normalized by p^{(e+e')t}. No verdict is implied."""
    counter = _as_budget(budget)
    p = fam.p
    t = seq.t
    table = []
    for e in outer_levels:
        fixed = PFamily.frobenius(fam.level_ideal(e))
        for e2 in inner_levels:
            ds = escape_set(seq, fixed, e2, pres, counter)
            v = Fraction(ds.size, p ** ((e + e2) * t))
            table.append({"e": e, "e_inner": e2, "num": str(v.numerator), "den": str(v.denominator)})
    return CheckReport("pfamily_truncation", {}, len(table), len(table), True, None, table)


def check_threshold_bounds(seq: IdealSequence, J: Ideal, e: int, pres=None,
                           budget=None) -> CheckReport:
    """Positive-normalized count is bounded by both threshold surrogates:
    the simplex term and the product of per-entry (nu+1)/p^e."""
    counter = _as_budget(budget)
    p = J.ring.p
    t = seq.t
    ds = escape_set(seq, PFamily.frobenius(J), e, pres, counter)
    total = nu(ideal_sum(*seq.entries), J, e, pres, budget=counter).nu
    simplex = Fraction(total, p ** e) ** t / factorial(t)
    product = Fraction(1)
    for I in seq.entries:
        product *= Fraction(nu(I, J, e, pres, budget=counter).nu + 1, p ** e)
    left = Fraction(ds.positive_size, p ** (e * t))
    right = min(simplex, product)
    ok = left <= right
    return CheckReport("threshold_bounds", {"e": e}, left, right, ok,
                       None if ok else (left, right))
