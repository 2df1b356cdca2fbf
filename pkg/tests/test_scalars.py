import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from liepencil.scalars import (CyclotomicScalar, canon, cyclotomic_polynomial, euler_phi,
                               field_of, format_scalar, lift, parse_scalar, zeta)

ORDERS = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def elements(draw, order=None):
    m = draw(ORDERS) if order is None else order
    coeffs = draw(st.lists(small, min_size=0, max_size=m + 2))
    return CyclotomicScalar(m, coeffs)


def embed(x, m):
    z = cmath.exp(2j * cmath.pi / m)
    return sum(float(c) * z**i for i, c in enumerate(x.coeffs)) if isinstance(x, CyclotomicScalar) else float(x)


@pytest.mark.parametrize("m", range(1, 25))
def test_cyclotomic_polynomial_matches_sympy(m):
    x = sympy.Symbol("x")
    want = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m)) == [int(c) for c in want]
    assert euler_phi(m) == sympy.totient(m)


def test_zeta_powers():
    z = zeta(4)
    assert z**2 == -1
    assert canon(z**4) == 1
    assert z**3 == -z
    assert canon(zeta(6) ** 3) == -1


@given(st.data())
def test_ring_operations_commute_with_complex_embedding(data):
    m = data.draw(ORDERS)
    x, y = data.draw(elements(m)), data.draw(elements(m))
    for got, want in ((x + y, embed(x, m) + embed(y, m)), (x * y, embed(x, m) * embed(y, m)),
                      (x - y, embed(x, m) - embed(y, m))):
        assert abs(embed(got, m) - want) < 1e-9


@given(st.data())
def test_inverse(data):
    m = data.draw(ORDERS)
    x = data.draw(elements(m))
    if not x:
        with pytest.raises(ZeroDivisionError):
            x.inverse()
        return
    assert canon(x * x.inverse()) == 1
    assert abs(embed(x.inverse(), m) - 1 / embed(x, m)) < 1e-6


@given(st.data())
def test_field_axioms(data):
    m = data.draw(ORDERS)
    x, y, w = (data.draw(elements(m)) for _ in range(3))
    assert (x + y) * w == x * w + y * w
    assert (x * y) * w == x * (y * w)
    assert x * y == y * x


@given(st.data())
def test_format_parse_round_trip(data):
    m = data.draw(ORDERS)
    x = data.draw(elements(m))
    assert parse_scalar(format_scalar(x), m) == canon(x)


@given(st.data())
def test_lift_preserves_value(data):
    m = data.draw(st.sampled_from([2, 3, 4, 6]))
    x = data.draw(elements(m))
    y = lift(x, 12)
    assert abs(embed(y, 12) - embed(x, m)) < 1e-9


def test_canon_and_field_of():
    assert canon(CyclotomicScalar(4, [Fraction(3, 2)])) == Fraction(3, 2)
    assert isinstance(canon(5), Fraction)
    assert field_of([Fraction(1), zeta(4), zeta(3)]) == 12
    assert field_of([Fraction(1)]) == 1


def test_format_examples():
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(zeta(4) * 2 + 1) == "1 + 2*z"
    assert parse_scalar("z^2", 4) == -1
    with pytest.raises(ValueError):
        parse_scalar("1 + y", 4)
