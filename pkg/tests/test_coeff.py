from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hallforge.coeff import Coeff, DivisionByZero, GroundParams, parse_coeff, render_coeff

G2 = GroundParams(2)

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
qs = st.sampled_from([2, 3, 4, 5, 7, 8, 9])


@st.composite
def coeffs(draw, q=None):
    g = GroundParams(q if q is not None else draw(qs))
    return Coeff(draw(fracs), draw(fracs), g)


@st.composite
def coeff_triples(draw):
    g = GroundParams(draw(qs))
    return tuple(Coeff(draw(fracs), draw(fracs), g) for _ in range(3))


def test_examples():
    assert Coeff(1, 0, G2) * Coeff(0, 1, G2) == Coeff(0, 1, G2)
    assert Coeff(1, 1, G2) * Coeff(-1, 1, G2) == Coeff(1, 0, G2)
    assert Coeff(0, 0, G2) + Coeff(3, 5, G2) == Coeff(3, 5, G2)
    assert Coeff(1, 1, G2).inv() == Coeff(-1, 1, G2)
    assert Coeff(0, 1, G2).inv() == Coeff(0, Fraction(1, 2), G2)
    assert G2.vpow(0) == G2.one
    assert G2.vpow(2) == Coeff(2, 0, G2)
    assert G2.vpow(-1) == Coeff(0, Fraction(1, 2), G2)


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        G2.zero.inv()


def test_bad_q():
    for q in (0, 1, 6, 12):
        with pytest.raises(ValueError):
            GroundParams(q)


def test_square_q_collapses():
    g = GroundParams(4)
    assert g.vpow(1) == Coeff(2, 0, g)
    assert g.vpow(1).is_rational()


def test_mixed_ground_rejected():
    with pytest.raises(ValueError):
        G2.one + GroundParams(3).one


@given(coeff_triples())
def test_ring_axioms(t):
    x, y, z = t
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == x.ground.zero


@given(coeffs())
def test_inverse(x):
    if x:
        assert x * x.inv() == x.ground.one
        assert (x ** -2) * x * x == x.ground.one


@given(qs, st.integers(-8, 8), st.integers(-8, 8))
def test_vpow_homomorphism(q, a, b):
    g = GroundParams(q)
    assert g.vpow(a) * g.vpow(b) == g.vpow(a + b)
    assert g.vpow(2) == g.coeff(q)


@given(coeffs(q=3))
def test_render_parse_roundtrip(x):
    # render uses "v" for sqrt(q), which parse accepts back
    assert parse_coeff(render_coeff(x), x.ground) == x


def test_parse_forms():
    g = GroundParams(3)
    assert parse_coeff("v^-2", g) == g.coeff(Fraction(1, 3))
    assert parse_coeff("q", g) == g.coeff(3)
    assert parse_coeff("1 + 2*v", g) == g.coeff(1, 2)
    assert parse_coeff("-v^3", g) == g.coeff(0, -3)
    for bad in ("", "1 +", "w", "2**v"):
        with pytest.raises(ValueError):
            parse_coeff(bad, g)
