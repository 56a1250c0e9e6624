import random
from fractions import Fraction

import pytest

from frobvol.errors import (
    BadInputError,
    BadLevelError,
    BudgetExceededError,
    HypothesisViolatedError,
)
from frobvol.groebner import Ideal, QuotientPresentation, frobenius_power, ideal_power
from frobvol.regions import (
    BoxRegion,
    BudgetCounter,
    DownSet,
    IdealSequence,
    PFamily,
    ScaledPointSet,
    axis_bounds,
    base_slabs,
    border_points,
    box_region,
    box_region_csv,
    check_hypothesis,
    containment_exponents,
    covering_sets,
    downset_csv,
    escape_set,
    escapes,
    fill_refinement,
    positive_point_count,
    region_volume,
    scaled_points,
    staircase_svg,
    verify_cover,
)
from frobvol.ring import PolynomialRing
from oracles import brute_force_escape_points, downset_size_inclusion_exclusion


@pytest.fixture
def R2():
    return PolynomialRing(2, ["x", "y"])


def seq_of(ring, *gen_lists):
    return IdealSequence([Ideal(ring, [ring.poly(g) for g in gens]) for gens in gen_lists])


@pytest.fixture
def worked(R2):
    m = Ideal(R2, list(R2.gens()))
    fam = PFamily.frobenius(m)
    seq_f = seq_of(R2, ["x"], ["y^2"])
    seq_g = seq_of(R2, ["x"], ["y^2+x"])
    return m, fam, seq_f, seq_g


def test_escapes_examples(worked, R2):
    m, fam, seq_f, _ = worked
    assert escapes((1, 0), seq_f, fam, 1)
    assert not escapes((1, 1), seq_f, fam, 1)
    assert escapes((0, 0), seq_f, fam, 1)


def test_escape_set_counts(worked, R2):
    _, fam, seq_f, seq_g = worked
    assert escape_set(seq_f, fam, 2).size == 8
    assert escape_set(seq_g, fam, 2).size == 12
    R3 = PolynomialRing(3, ["x", "y"])
    m3 = Ideal(R3, list(R3.gens()))
    ds = escape_set(seq_of(R3, ["x"], ["y"]), PFamily.frobenius(m3), 1)
    assert ds.size == 9
    assert sorted(ds.points()) == [(a, b) for a in range(3) for b in range(3)]


def test_positive_counts(worked):
    _, fam, seq_f, seq_g = worked
    assert positive_point_count(escape_set(seq_g, fam, 1)) == 0
    assert positive_point_count(escape_set(seq_g, fam, 2)) == 5
    assert positive_point_count(escape_set(seq_f, fam, 2)) == 3


def test_escape_set_matches_bruteforce(worked):
    _, fam, seq_f, seq_g = worked
    for seq in (seq_f, seq_g):
        for e in (1, 2):
            assert set(escape_set(seq, fam, e).points()) == brute_force_escape_points(seq, fam, e)


def test_down_closedness_spot_checks(worked):
    _, fam, _, seq_g = worked
    rng = random.Random(17)
    ds = escape_set(seq_g, fam, 3)
    for _ in range(25):
        mp = rng.choice(ds.max_points)
        below = tuple(rng.randint(0, c) for c in mp)
        assert below in ds
        assert escapes(below, seq_g, fam, 3)


def test_cardinality_bound(worked):
    _, fam, seq_f, seq_g = worked
    for seq in (seq_f, seq_g):
        mus = seq.generator_counts()
        ells = containment_exponents(seq, fam)
        for e in (1, 2, 3):
            cap = (2 ** (e * seq.t))
            for mu, ell in zip(mus, ells):
                cap *= mu * ell
            ds = escape_set(seq, fam, e)
            assert ds.size <= cap
            # every coordinate stays below its per-axis finiteness bound
            bounds = axis_bounds(seq, fam, e)
            for mp in ds.max_points:
                assert all(c < b for c, b in zip(mp, bounds))


def test_floor_membership(worked):
    _, fam, _, seq_g = worked
    rng = random.Random(23)
    e = 2
    ds = escape_set(seq_g, fam, e)
    region = box_region(ds)
    q = 2**e
    for _ in range(30):
        corner = rng.choice(region.corners)
        alpha = tuple(
            Fraction(rng.randint(0, 8 * c), 8 * q) if c else Fraction(0) for c in corner
        )
        floored = tuple((q * a).numerator // (q * a).denominator for a in alpha)
        assert floored in ds


def test_border_examples(R2):
    # one-dimensional: {0, 1/2, 1} has the single border point 1
    C = ScaledPointSet(1, 1, {(0,), (1,), (2,)})
    assert border_points(C).points == frozenset({(2,)})
    # full square grid: border is the upper-right L
    grid = ScaledPointSet(2, 1, {(a, b) for a in range(3) for b in range(3)})
    expected = {(a, b) for a in range(3) for b in range(3) if a == 2 or b == 2}
    assert border_points(grid).points == frozenset(expected)


def test_border_figure_data(worked, R2):
    _, fam, _, seq_g = worked
    V = scaled_points(escape_set(seq_g, fam, 2))
    C = V.union(base_slabs(seq_g, fam, 2))
    expected = {(0, 3), (0, 4), (1, 1), (1, 2), (1, 3), (2, 1), (3, 0), (3, 1), (4, 0)}
    assert border_points(C).points == frozenset(expected)


def test_fill_refinement_examples():
    C = ScaledPointSet(1, 1, {(1,)})
    assert fill_refinement(C, 1, 2).points == frozenset({(1,), (2,)})
    assert fill_refinement(ScaledPointSet(1, 1, set()), 1, 2).points == frozenset()
    C2 = ScaledPointSet(2, 2, {(1, 1)})
    assert fill_refinement(C2, 1, 2).points == frozenset(
        {(1, 1), (1, 2), (2, 1), (2, 2)}
    )


def test_covering_sets_t1(R2):
    x, _ = R2.gens()
    seq = IdealSequence([Ideal(R2, [x])])
    fam = PFamily.frobenius(Ideal(R2, [x]))
    R_set, _ = covering_sets(seq, fam, 1, 1)
    # escape set at level 1 is {0, 1}; refinement fills to {0, 1, 2} over 4
    assert R_set.points == frozenset({(0,), (1,), (2,)})


def test_covering_figure_l_set(worked):
    _, fam, _, seq_g = worked
    _, L_set = covering_sets(seq_g, fam, 2, 1)
    stars = set()
    for xs, ys in [
        (0, [5, 6, 7, 8]), (1, range(1, 11)), (2, range(1, 11)),
        (3, range(1, 9)), (4, range(1, 9)), (5, range(0, 5)), (6, range(0, 5)),
        (7, range(0, 5)), (8, range(0, 5)), (9, [1, 2]), (10, [1, 2]),
    ]:
        stars.update((xs, yy) for yy in ys)
    assert L_set.points == frozenset(stars)


def test_verify_cover_examples(worked):
    _, fam, seq_f, seq_g = worked
    assert verify_cover(seq_f, fam, 2, 1)
    assert verify_cover(seq_g, fam, 1, 2)
    R3 = PolynomialRing(3, ["x", "y"])
    m3 = Ideal(R3, list(R3.gens()))
    assert verify_cover(seq_of(R3, ["x"], ["y"]), PFamily.frobenius(m3), 1, 1)


def test_unit_reference_rejected(R2):
    x, _ = R2.gens()
    seq = IdealSequence([Ideal(R2, [x])])
    fam = PFamily.frobenius(Ideal(R2, [R2.one()]))
    with pytest.raises(HypothesisViolatedError):
        escape_set(seq, fam, 1)


def test_hypothesis_violation_names_generator(R2):
    x, y = R2.gens()
    seq = IdealSequence([Ideal(R2, [y])])
    fam = PFamily.frobenius(Ideal(R2, [x]))
    with pytest.raises(HypothesisViolatedError, match="entry 1"):
        check_hypothesis(seq, fam)


def test_border_injection_bound(worked):
    _, fam, seq_f, seq_g = worked
    for seq in (seq_f, seq_g):
        mus = seq.generator_counts()
        ells = containment_exponents(seq, fam)
        t = seq.t
        for e1 in (1, 2):
            V = scaled_points(escape_set(seq, fam, e1))
            C = V.union(base_slabs(seq, fam, e1))
            border = border_points(C)
            bound = 0
            for n in range(t):
                term = 1
                for j in range(t):
                    if j != n:
                        term *= mus[j] * ells[j] + 1
                bound += term
            assert len(border) <= (2 ** (e1 * (t - 1))) * bound


def test_downset_cardinality_inclusion_exclusion(worked):
    _, fam, seq_f, seq_g = worked
    for seq in (seq_f, seq_g):
        for e in (1, 2, 3):
            ds = escape_set(seq, fam, e)
            assert ds.size == downset_size_inclusion_exclusion(ds.max_points)


def test_box_region_volumes(worked, R2):
    _, fam, seq_f, _ = worked
    ds = escape_set(seq_f, fam, 2)
    assert region_volume(box_region(ds)) == Fraction(3, 16)
    seq_xy = seq_of(R2, ["x"], ["y"])
    ds3 = escape_set(seq_xy, fam, 3)
    assert region_volume(box_region(ds3)) == Fraction(49, 64)
    empty = BoxRegion(2, 1, 2, [(0, 0)])
    assert region_volume(empty) == 0


def test_downset_from_max_points():
    ds = DownSet.from_max_points(2, 1, 2, [(1, 3), (3, 1)])
    assert ds.size == 12
    assert ds.positive_size == 5
    assert (0, 3) in ds and (2, 2) not in ds


def test_axis_bounds(worked, R2):
    m, fam, seq_f, _ = worked
    assert axis_bounds(seq_f, fam, 2) == (4, 4)
    seq_pair = IdealSequence([Ideal(R2, [R2.poly("x"), R2.poly("y^2")])])
    # two generators, ell = 1 (I is inside m), so bound 2 * 1 * 4
    assert axis_bounds(seq_pair, fam, 2) == (8,)


def test_csv_export(worked):
    _, fam, seq_f, _ = worked
    ds = escape_set(seq_f, fam, 1)
    text = downset_csv(ds)
    assert text == "e,a1,a2\n1,0,0\n1,1,0\n"
    multi = downset_csv([escape_set(seq_f, fam, e) for e in (1, 2)])
    assert multi.startswith("e,a1,a2\n1,0,0\n1,1,0\n2,0,0\n")
    assert box_region_csv(box_region(ds)) == "e,a1,a2\n1,1,0\n"


def test_staircase_outline_matches_region(worked):
    from frobvol.regions import _staircase_path

    _, fam, _, seq_g = worked
    region = box_region(escape_set(seq_g, fam, 2))
    path = _staircase_path(region)
    F = Fraction
    assert path == [
        (F(0), F(3, 4)), (F(1, 4), F(3, 4)), (F(1, 4), F(1, 4)),
        (F(3, 4), F(1, 4)), (F(3, 4), F(0)),
    ]


def test_svg_export(worked):
    _, fam, seq_f, seq_g = worked
    regions = [box_region(escape_set(seq_g, fam, e)) for e in (1, 2)]
    svg = staircase_svg(regions)
    assert svg.startswith("<svg ")
    assert svg.count("<polyline") == 2
    assert "e=1" in svg and "e=2" in svg
    assert svg == staircase_svg(regions)  # stable
    with pytest.raises(BadInputError):
        staircase_svg([BoxRegion(3, 1, 2, [(1, 1, 1)])])


def test_budget_guard(worked):
    _, fam, _, seq_g = worked
    with pytest.raises(BudgetExceededError):
        escape_set(seq_g, fam, 4, budget=10)
    counter = BudgetCounter(10**6)
    escape_set(seq_g, fam, 2, budget=counter)
    assert counter.used > 0


def test_explicit_family(R2):
    m = Ideal(R2, list(R2.gens()))
    levels = [ideal_power(m, 2**e) for e in range(3)]
    fam = PFamily.explicit(levels)
    seq = seq_of(R2, ["x"], ["y"])
    assert escape_set(seq, fam, 1).size == 3
    with pytest.raises(BadLevelError):
        fam.level_ideal(3)
    with pytest.raises(BadInputError):
        # x^2 (the bracket square of x) is not inside (x^3, y^3)
        PFamily.explicit([m, Ideal(R2, [R2.poly("x^3"), R2.poly("y^3")])])


def test_escape_sets_are_order_independent(R2):
    rng = random.Random(59)
    other = PolynomialRing(2, ["x", "y"], "lex")
    texts = ["x^2+y", "y^2+x*y", "x*y", "x+y"]
    for _ in range(6):
        gens = [rng.choice(texts), rng.choice(texts)]
        ds_a = escape_set(
            seq_of(R2, [gens[0]], [gens[1]]),
            PFamily.frobenius(Ideal(R2, list(R2.gens()))), 2,
        )
        ds_b = escape_set(
            seq_of(other, [gens[0]], [gens[1]]),
            PFamily.frobenius(Ideal(other, list(other.gens()))), 2,
        )
        assert ds_a.max_points == ds_b.max_points


def test_explicit_family_in_quotient(R2):
    x, y = R2.gens()
    pres = QuotientPresentation(R2, Ideal(R2, [x * y]))
    # the p-th bracket power lands in the next level only modulo the relation
    lvl0 = Ideal(R2, [R2.poly("x+y")])
    lvl1 = Ideal(R2, [R2.poly("x^2+y^2+x*y")])
    with pytest.raises(BadInputError):
        PFamily.explicit([lvl0, lvl1])  # fails in the ambient ring
    fam = PFamily.explicit([lvl0, lvl1], pres)
    seq = IdealSequence([Ideal(R2, [x])])
    assert escape_set(seq, fam, 1, pres).size >= 1


def test_explicit_family_bad_level_propagates(R2):
    m = Ideal(R2, list(R2.gens()))
    fam = PFamily.explicit([m, frobenius_power(m, 2)])
    seq = IdealSequence([Ideal(R2, [R2.gens()[0]])])
    assert escapes((1,), seq, fam, 1)
    with pytest.raises(BadLevelError):
        escapes((1,), seq, fam, 2)
    with pytest.raises(BadLevelError):
        escape_set(seq, fam, 5)


def test_quotient_membership(R2):
    x, y = R2.gens()
    pres = QuotientPresentation(R2, Ideal(R2, [x * y]))
    m = Ideal(R2, [x, y])
    seq = IdealSequence([Ideal(R2, [x])])
    fam = PFamily.frobenius(m)
    ds = escape_set(seq, fam, 2, pres)
    assert ds.size == 4  # x^a stays outside (x^4, y^4, xy) exactly for a <= 3
    assert verify_cover(seq, fam, 1, 1, pres)


def test_presentation_keyed_caches(R2):
    x, y = R2.gens()
    m = Ideal(R2, [x, y])
    fam = PFamily.frobenius(m)
    seq = IdealSequence([m])  # single entry generated by both variables
    pres = QuotientPresentation(R2, Ideal(R2, [x * y]))
    plain = escape_set(seq, fam, 1)
    quotient = escape_set(seq, fam, 1, pres)
    # m^2 is inside (x^2, y^2) + (xy) but not inside (x^2, y^2)
    assert plain.size == 3 and quotient.size == 2
    assert escape_set(seq, fam, 1).size == 3  # cache entries stay separate
