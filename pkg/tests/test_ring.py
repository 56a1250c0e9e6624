import random

import pytest

from frobvol.errors import (
    ExponentOverflowError,
    NonPrimeError,
    PolyParseError,
    RingMismatchError,
)
from frobvol.ring import (
    EliminationOrder,
    GRevLex,
    Lex,
    PolynomialRing,
    PrimeField,
)
from oracles import naive_power, random_poly


def test_field_ops():
    F5 = PrimeField(5)
    assert F5(2).inverse() == F5(3)
    F2 = PrimeField(2)
    assert F2(1) + F2(1) == F2(0)
    F7 = PrimeField(7)
    assert F7(4) * F7(5) == F7(6)


def test_field_errors():
    with pytest.raises(ZeroDivisionError):
        PrimeField(5)(0).inverse()
    with pytest.raises(RingMismatchError):
        PrimeField(5)(1) + PrimeField(7)(1)
    for bad in (0, 1, 4, 9, 2**31):
        with pytest.raises(NonPrimeError):
            PrimeField(bad)
    assert PrimeField(2147483647).p == 2147483647  # largest supported prime


def test_fp_element_mixed_ints():
    F5 = PrimeField(5)
    assert F5(3) + 4 == F5(2)
    assert 2 * F5(4) == F5(3)
    assert F5(1) - 3 == F5(3)


@pytest.fixture
def R2():
    return PolynomialRing(2, ["x", "y"])


@pytest.fixture
def R5():
    return PolynomialRing(5, ["x", "y"])


def test_poly_mul(R2, R5):
    x, y = R2.gens()
    assert (x + y) * (x + y) == R2.poly("x^2 + y^2")
    f = R2.poly("x^2*y + x + 1")
    assert f * R2.one() == f
    # (x+y)(x-y) = x^2 - y^2 = x^2 + 4y^2 over F_5
    assert R5.poly("x+y") * R5.poly("x-y") == R5.poly("x^2 + 4*y^2")


def test_poly_power(R2):
    x, y = R2.gens()
    assert (x + y) ** 4 == R2.poly("x^4 + y^4")
    assert (x + y) ** 0 == R2.one()
    R3 = PolynomialRing(3, ["x", "y"])
    assert R3.poly("x+y") ** 3 == R3.poly("x^3 + y^3")


def test_power_matches_naive_and_frobenius():
    rng = random.Random(7)
    for p in (2, 3):
        ring = PolynomialRing(p, ["x", "y", "z"])
        for _ in range(6):
            f = random_poly(ring, rng)
            for e in range(5):
                q = p**e
                assert f**q == f.frobenius(q)
            for k in (0, 1, 2, 3, 5, p, p * 2, p**2):
                assert f**k == naive_power(f, k)


def test_ring_axioms_random():
    rng = random.Random(11)
    ring = PolynomialRing(5, ["x", "y"])
    for _ in range(25):
        f = random_poly(ring, rng)
        g = random_poly(ring, rng)
        h = random_poly(ring, rng)
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)


def _check_order_properties(order, nvars, rng):
    def random_mono():
        return tuple(rng.randint(0, 5) for _ in range(nvars))

    one = (0,) * nvars
    for _ in range(200):
        a, b, c = random_mono(), random_mono(), random_mono()
        ka, kb = order.key(a), order.key(b)
        # total: keys are equal only on equal monomials
        if a != b:
            assert ka != kb
        # multiplicative: a < b implies a+c < b+c
        if ka < kb:
            assert order.key(tuple(x + z for x, z in zip(a, c))) < order.key(
                tuple(y + z for y, z in zip(b, c))
            )
        # 1 is minimal
        if a != one:
            assert order.key(one) < ka


def test_order_properties():
    rng = random.Random(3)
    _check_order_properties(Lex(3), 3, rng)
    _check_order_properties(GRevLex(3), 3, rng)
    _check_order_properties(EliminationOrder(1, GRevLex(2)), 3, rng)


def test_grevlex_vs_lex_disagree():
    ring_g = PolynomialRing(2, ["x", "y"], "grevlex")
    ring_l = PolynomialRing(2, ["x", "y"], "lex")
    f_g = ring_g.poly("x + y^2")
    f_l = ring_l.poly("x + y^2")
    assert f_g.leading()[0] == (0, 2)  # degree wins
    assert f_l.leading()[0] == (1, 0)  # x block wins


def test_elimination_order_dominates():
    order = EliminationOrder(1, GRevLex(2))
    # any aux-positive monomial beats any aux-free one
    assert order.key((1, 0, 0)) > order.key((0, 9, 9))


def test_parse_print_roundtrip(R2, R5):
    for text in ("y^2 + x", "x^4 + x^2*y^2 + 1", "x", "1"):
        f = R2.poly(text)
        assert str(f) == text
        assert R2.poly(str(f)) == f
    f = R5.poly("3*x^2*y + 4*y + 2")
    assert str(f) == "3*x^2*y + 4*y + 2"
    assert R5.poly(str(f)) == f
    # subtraction and coefficient reduction normalize away
    assert str(R5.poly("x - y")) == "x + 4*y"
    assert str(R5.poly("7*x")) == "2*x"
    assert str(R5.poly("5*x")) == "0"


def test_parse_errors(R2):
    with pytest.raises(PolyParseError):
        R2.poly("x + w")  # unknown variable
    with pytest.raises(PolyParseError):
        R2.poly("2x")  # juxtaposition
    with pytest.raises(PolyParseError):
        R2.poly("x +")
    with pytest.raises(PolyParseError):
        R2.poly("x ^ y")
    with pytest.raises(PolyParseError):
        R2.poly("")
    err = None
    try:
        R2.poly("x + $", line=3, column=10)
    except PolyParseError as exc:
        err = exc
    assert err is not None and err.line == 3 and err.column >= 10


def test_exponent_overflow(R2):
    x, _ = R2.gens()
    big = R2.poly(f"x^{2**62}")
    with pytest.raises(ExponentOverflowError):
        _ = big * big
    with pytest.raises(ExponentOverflowError):
        _ = big.frobenius(4)
    assert (big * x).coeffs  # one step below the limit still fine


def test_ring_mismatch(R2, R5):
    with pytest.raises(RingMismatchError):
        _ = R2.poly("x") + R5.poly("x")


def test_monomial_order_default_is_grevlex(R2):
    f = R2.poly("x*y + x^2 + y^3")
    assert [m for m, _ in f.terms_desc()] == [(0, 3), (2, 0), (1, 1)]
