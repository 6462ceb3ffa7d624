import pytest
from hypothesis import given, settings, strategies as st

from qcconv import divmod_poly, gcd_poly, laurent, monomial, one, zero
from conftest import F2, F4, F5, P


def test_canonical_form():
    f = laurent(F2, [0, 1, 1, 0, 0], lo=-2)
    assert f.lo == -1 and f.coeffs == (1, 1)
    assert laurent(F2, [0, 0, 0]).is_zero
    assert zero(F2).degree is None and zero(F2).order is None


def test_parse_shorthand():
    assert P(F2, "1101") == laurent(F2, [1, 1, 0, 1])
    assert P(F2, "D^-3 * 1001") == laurent(F2, [1, 0, 0, 1], lo=-3)


def test_add_sub_mul_basic():
    assert P(F2, "11") * P(F2, "11") == P(F2, "101")          # (1+D)^2 = 1+D^2
    assert P(F2, "D^-1 * 1") + P(F2, "D^-1 * 1") == zero(F2)  # characteristic 2
    a, b = P(F5, "23"), P(F5, "41")
    assert a + b == P(F5, "14")
    assert a - a == zero(F5)


def test_adjoint_examples():
    assert P(F2, "11").adjoint() == laurent(F2, [1, 1], lo=-1)
    f = monomial(F2, 3) + monomial(F2, -3)
    assert f.adjoint() == f
    assert P(F2, "1101").adjoint() == laurent(F2, [1, 0, 1, 1], lo=-3)


def test_divmod_and_gcd_examples():
    f = P(F2, "11001")   # 1 + D + D^4
    g = P(F2, "10101")   # 1 + D^2 + D^4
    assert gcd_poly(f, g) == one(F2)
    q, r = divmod_poly(f, g)
    assert q * g + r == f
    assert gcd_poly(f, zero(F2)) == f.monic()
    assert gcd_poly(zero(F2), zero(F2)).is_zero


def test_divmod_rejects_laurent_and_zero():
    f = laurent(F2, [1], lo=-1)
    with pytest.raises(ValueError):
        divmod_poly(f, one(F2))
    with pytest.raises(ZeroDivisionError):
        divmod_poly(one(F2), zero(F2))
    with pytest.raises(ValueError):
        gcd_poly(f, one(F2))


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        P(F2, "11") + P(F5, "11")


@st.composite
def polys(draw, field=F4, maxdeg=6):
    coeffs = draw(st.lists(st.integers(0, field.q - 1), min_size=0,
                           max_size=maxdeg + 1))
    lo = draw(st.integers(-4, 4))
    return laurent(field, coeffs, lo)


@given(polys(), polys())
@settings(max_examples=150, deadline=None)
def test_adjoint_is_ring_homomorphism(f, g):
    assert (f * g).adjoint() == f.adjoint() * g.adjoint()
    assert (f + g).adjoint() == f.adjoint() + g.adjoint()
    assert f.adjoint().adjoint() == f


@st.composite
def poly_pairs(draw):
    field = F2
    a = draw(st.lists(st.integers(0, 1), min_size=1, max_size=7))
    b = draw(st.lists(st.integers(0, 1), min_size=1, max_size=7))
    return laurent(field, a), laurent(field, b)


@given(poly_pairs())
@settings(max_examples=150, deadline=None)
def test_gcd_divides_and_commutes(pair):
    f, g = pair
    d = gcd_poly(f, g)
    assert d == gcd_poly(g, f)
    if not d.is_zero:
        for h in (f, g):
            _, r = divmod_poly(h, d)
            assert r.is_zero
    if not d.is_zero:
        assert d.leading_coeff() == 1


@given(poly_pairs(), poly_pairs())
@settings(max_examples=100, deadline=None)
def test_gcd_associative_up_to_monic(p1, p2):
    a, b = p1
    c, _ = p2
    assert gcd_poly(gcd_poly(a, b), c) == gcd_poly(a, gcd_poly(b, c))
