"""Independent brute-force oracles used to cross-check the library.

Nothing here shares code paths with the fast implementations: membership is
decided by degree-bounded linear algebra over F_p, escape sets by exhaustive
cell-by-cell ideal containment built from raw generator products, staircase
counts by enumerating a bounding box.
"""

from __future__ import annotations

import itertools

from frobvol.groebner import (
    Ideal,
    groebner_basis,
    ideal_contains,
    ideal_power,
    ideal_product,
)
from frobvol.ring import mono_divides


def monomials_up_to(nvars: int, degree: int):
    """All exponent tuples with total degree <= degree, sorted."""

    def gen(slots, remaining):
        if slots == 0:
            yield ()
            return
        for first in range(remaining + 1):
            for rest in gen(slots - 1, remaining - first):
                yield (first,) + rest

    return sorted(gen(nvars, degree))


def la_membership(f, gens, degree_bound: int) -> bool:
    """Is f an F_p-combination of monomial multiples of the generators,
    with every product of total degree <= degree_bound?"""
    ring = f.ring
    p = ring.p
    rows = monomials_up_to(ring.nvars, degree_bound)
    row_index = {m: i for i, m in enumerate(rows)}
    columns = []
    for g in gens:
        if g.is_zero:
            continue
        gdeg = g.total_degree()
        for shift in monomials_up_to(ring.nvars, degree_bound - gdeg):
            col = {}
            for m, c in g.coeffs.items():
                mm = tuple(a + b for a, b in zip(m, shift))
                if sum(mm) > degree_bound:
                    col = None
                    break
                col[row_index[mm]] = (col.get(row_index[mm], 0) + c) % p
            if col:
                columns.append(col)
    target = {}
    for m, c in f.coeffs.items():
        if sum(m) > degree_bound:
            return False
        target[row_index[m]] = c

    # dense Gaussian elimination on the augmented system
    nrows = len(rows)
    ncols = len(columns)
    matrix = [[0] * (ncols + 1) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, c in col.items():
            matrix[i][j] = c
    for i, c in target.items():
        matrix[i][ncols] = c

    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, nrows):
            if matrix[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        matrix[pivot_row], matrix[pivot] = matrix[pivot], matrix[pivot_row]
        inv = pow(matrix[pivot_row][col], p - 2, p)
        matrix[pivot_row] = [(v * inv) % p for v in matrix[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [
                    (a - factor * b) % p for a, b in zip(matrix[r], matrix[pivot_row])
                ]
        pivot_row += 1
        if pivot_row == nrows:
            break
    # consistent iff no row reads 0 = nonzero
    for r in range(nrows):
        if matrix[r][ncols] and not any(matrix[r][j] for j in range(ncols)):
            return False
    return True


def brute_force_ell(I: Ideal, J: Ideal, pres=None, cap: int = 64) -> int:
    """Least k with I^k inside J, via raw generator-set powers."""
    for k in range(1, cap + 1):
        if ideal_contains(ideal_power(I, k), J, pres):
            return k
    raise AssertionError("oracle ell search exhausted")


def brute_force_escape_points(seq, fam, e: int, pres=None) -> set:
    """Exhaustive cell-by-cell escape test over the finiteness bounding box.

    Each cell is decided from scratch: raw generator-set powers, raw pairwise
    products, containment through a Groebner basis of the level ideal.
    """
    level = fam.level_ideal(e)
    q = fam.p ** e
    bounds = []
    for I in seq.entries:
        ell = brute_force_ell(I, fam.base_level(), pres)
        bounds.append(I.num_gens * ell * q)
    pts = set()
    for cell in itertools.product(*(range(b) for b in bounds)):
        powers = [ideal_power(I, a) for I, a in zip(seq.entries, cell)]
        prod = ideal_product(*powers)
        if not ideal_contains(prod, level, pres):
            pts.add(cell)
    return pts


def staircase_count_brute(J: Ideal, pres=None):
    """Standard-monomial count by enumerating the box under the pure powers.

    Returns None when some variable has no pure power among the leading
    monomials (infinite staircase)."""
    gb = groebner_basis(J, pres)
    if gb.contains_one:
        return 0
    nvars = J.ring.nvars
    lms = list(gb.leading_monomials)
    box = []
    for i in range(nvars):
        pures = [
            m[i] for m in lms if m[i] > 0 and all(e == 0 for j, e in enumerate(m) if j != i)
        ]
        if not pures:
            return None
        box.append(min(pures))
    count = 0
    for cell in itertools.product(*(range(b) for b in box)):
        if not any(mono_divides(lm, cell) for lm in lms):
            count += 1
    return count


def downset_size_inclusion_exclusion(max_points) -> int:
    """|union of boxes [0, m]| by inclusion-exclusion over the antichain."""
    pts = list(max_points)
    total = 0
    for r in range(1, len(pts) + 1):
        for subset in itertools.combinations(pts, r):
            meet = tuple(min(xs) for xs in zip(*subset))
            size = 1
            for v in meet:
                size *= v + 1
            total += (-1) ** (r + 1) * size
    return total


def naive_power(f, k: int):
    """Repeated multiplication, no Frobenius shortcut."""
    result = f.ring.one()
    for _ in range(k):
        result = result * f
    return result


def random_poly(ring, rng, max_degree=3, max_terms=3, no_constant=False):
    """A random nonzero polynomial with small support."""
    while True:
        raw = {}
        for _ in range(rng.randint(1, max_terms)):
            deg = rng.randint(1 if no_constant else 0, max_degree)
            exps = [0] * ring.nvars
            for _ in range(deg):
                exps[rng.randrange(ring.nvars)] += 1
            raw[tuple(exps)] = rng.randint(1, ring.p - 1)
        f = ring.from_dict(raw)
        if not f.is_zero and not (no_constant and any(not any(m) for m in f.coeffs)):
            return f
