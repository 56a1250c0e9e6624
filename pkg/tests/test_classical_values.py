"""Classical invariants with known closed forms, frozen as regression values.

These are standard examples: F-pure thresholds of plane curve singularities
and Hilbert-Kunz functions of quadric/nodal hypersurfaces. The per-level
values below follow the known closed forms; the first level of each family
was also verified by hand from the definitions.
"""

from fractions import Fraction

from frobvol.groebner import Ideal, QuotientPresentation
from frobvol.invariants import hilbert_kunz_table, threshold_table
from frobvol.ring import PolynomialRing


def _threshold_values(p, f_text, e_max):
    R = PolynomialRing(p, ["x", "y"])
    m = Ideal(R, list(R.gens()))
    table = threshold_table(Ideal(R, [R.poly(f_text)]), m, range(1, e_max + 1))
    return [v for _, v in table.rows]


def test_cusp_thresholds():
    # toward 1/2 in characteristic 2
    assert _threshold_values(2, "y^2-x^3", 6) == [
        Fraction(2 ** (e - 1) - 1, 2**e) for e in range(1, 7)
    ]
    # toward 2/3 in characteristic 3
    assert _threshold_values(3, "y^2-x^3", 4) == [
        Fraction(2 * 3 ** (e - 1) - 1, 3**e) for e in range(1, 5)
    ]
    # toward 5/6 when p is 1 mod 6
    vals = _threshold_values(7, "y^2-x^3", 3)
    assert vals == [Fraction(5, 7), Fraction(40, 49), Fraction(285, 343)]
    assert all(abs(v - Fraction(5, 6)) < Fraction(1, 7**e) for e, v in enumerate(vals, start=1))


def test_diagonal_quartic_threshold():
    # x^4 + y^4 tends to 1/2 when p is 1 mod 4
    assert _threshold_values(5, "x^4+y^4", 3) == [
        Fraction(5**e - 1, 2 * 5**e) for e in range(1, 4)
    ]


def test_quadric_cone_hilbert_kunz():
    # the classical quadric-cone Hilbert-Kunz function (3q^2 - 1)/2, limit 3/2
    R = PolynomialRing(3, ["x", "y", "z"])
    pres = QuotientPresentation(R, Ideal(R, [R.poly("x^2+y^2+z^2")]))
    m = Ideal(R, list(R.gens()))
    table = hilbert_kunz_table(m, range(1, 4), pres)
    assert table.flags["d"] == 2
    assert [v for _, v in table.rows] == [
        Fraction(3 * 9**e - 1, 2 * 9**e) for e in range(1, 4)
    ]


def test_node_hilbert_kunz():
    # multiplicity-2 curve: rows 2 - 1/q
    R = PolynomialRing(2, ["x", "y"])
    pres = QuotientPresentation(R, Ideal(R, [R.poly("x*y")]))
    m = Ideal(R, list(R.gens()))
    table = hilbert_kunz_table(m, range(1, 7), pres)
    assert [v for _, v in table.rows] == [
        Fraction(2 * 2**e - 1, 2**e) for e in range(1, 7)
    ]
