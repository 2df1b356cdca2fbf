from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from liepencil.poly import Polynomial

N = 3
coeffs = st.integers(-3, 3).map(Fraction)
monos = st.tuples(*[st.integers(0, 2)] * N)
polys = st.dictionaries(monos, coeffs, max_size=5).map(lambda t: Polynomial(N, t))
points = st.tuples(*[st.integers(-3, 3).map(Fraction)] * N)
X = sympy.symbols("x0:3")


def to_sympy(p):
    return sum((c * sympy.prod([x**e for x, e in zip(X, m)]) for m, c in p.terms.items()), sympy.Integer(0))


@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p - q) - to_sympy(p) + to_sympy(q)) == 0


@given(polys, st.integers(0, N - 1))
def test_derivative_matches_sympy(p, i):
    assert sympy.expand(to_sympy(p.derivative(i)) - sympy.diff(to_sympy(p), X[i])) == 0


@given(polys, polys, points)
def test_evaluation_is_a_homomorphism(p, q, pt):
    assert (p * q)(pt) == p(pt) * q(pt)
    assert (p + q)(pt) == p(pt) + q(pt)


@given(polys)
def test_weight_components_sum_back(p):
    w = (0, 1, 3)
    comps = p.weight_components(w)
    total = Polynomial.zero(N)
    for k, c in comps.items():
        assert all(sum(a * b for a, b in zip(m, w)) == k for m in c.terms)
        total = total + c
    assert total == p


@given(polys, points)
def test_substitute_linear(p, pt):
    # x_i -> x_i + x_0 composed with evaluation
    images = [Polynomial.var(N, i) + Polynomial.var(N, 0) if i else Polynomial.var(N, 0)
              for i in range(N)]
    moved = tuple(pt[i] + pt[0] if i else pt[0] for i in range(N))
    assert p.substitute(images)(pt) == p(moved)


def test_text_form():
    x = Polynomial.var(2, 0)
    y = Polynomial.var(2, 1)
    p = x**2 * Fraction(1, 2) - x * y + 3
    assert p.to_text(["H", "E"]) == "1/2*H^2 - H*E + 3"
    assert Polynomial.zero(2).to_text() == "0"
    assert (x * y).to_text(["a+b", "c"]) == "[a+b]*c"
