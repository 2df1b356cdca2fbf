from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from liepencil.liealg import build_classical, heisenberg
from liepencil.poisson import (algebraic_independence, b_value, commutes, failure_bound,
                               gradient_in_kernel, index_estimate, is_central, jacobian_rank,
                               max_jacobian_rank, poisson_bracket, sample_points, stabilizer,
                               tensor_at)
from liepencil.poly import Polynomial
from liepencil.invariants import classical_generators

SL2 = build_classical("A", 1)
SL3 = build_classical("A", 2)
h, e, f = (Polynomial.var(3, i) for i in range(3))

coeffs = st.integers(-2, 2).map(Fraction)
monos = st.tuples(*[st.integers(0, 2)] * 3)
polys = st.dictionaries(monos, coeffs, max_size=4).map(lambda t: Polynomial(3, t))
X = sympy.symbols("x0:3")


def to_sympy(p):
    return sum((c * sympy.prod([x**k for x, k in zip(X, m)]) for m, c in p.terms.items()),
               sympy.Integer(0))


def sympy_bracket(a, F, G):
    """Independent oracle: sum_ij dF/dx_i dG/dx_j sum_k c_ij^k x_k."""
    F, G = to_sympy(F), to_sympy(G)
    total = 0
    for i in range(a.dim):
        for j in range(a.dim):
            lin = sum(c * X[k] for k, c in a.bracket_basis(i, j).items())
            total += sympy.diff(F, X[i]) * sympy.diff(G, X[j]) * lin
    return sympy.expand(total)


@given(polys, polys)
def test_bracket_matches_sympy(F, G):
    assert sympy.expand(to_sympy(poisson_bracket(SL2, F, G)) - sympy_bracket(SL2, F, G)) == 0


@given(polys, polys)
def test_antisymmetry(F, G):
    assert poisson_bracket(SL2, F, G) == -poisson_bracket(SL2, G, F)
    assert poisson_bracket(SL2, F, F).is_zero()


@given(polys, polys, polys)
def test_leibniz(F, G, H):
    lhs = poisson_bracket(SL2, F, G * H)
    assert lhs == poisson_bracket(SL2, F, G) * H + G * poisson_bracket(SL2, F, H)


@given(polys, polys, polys)
def test_jacobi(F, G, H):
    b = lambda x, y: poisson_bracket(SL2, x, y)
    assert (b(F, b(G, H)) + b(G, b(H, F)) + b(H, b(F, G))).is_zero()


def test_casimir_components():
    assert poisson_bracket(SL2, h * h, e * f).is_zero()
    assert poisson_bracket(SL2, e * f, h).is_zero()
    assert commutes(SL2, h * h, e * f)
    assert not commutes(SL2, e, f)
    assert not commutes(SL2, e, f, mode="sampled")
    assert poisson_bracket(SL2, e, f) == h
    with pytest.raises(ValueError):
        commutes(SL2, e, f, mode="bogus")


def test_tensor_and_stabilizer():
    assert all(v == 0 for row in tensor_at(SL2, [0, 0, 0]) for v in row)
    pt = [Fraction(3), Fraction(1), Fraction(-2)]
    assert len(stabilizer(SL2, pt)) == 1
    with pytest.raises(ValueError):
        tensor_at(SL2, [1, 2])


@pytest.mark.parametrize("alg,ind", [(SL2, 1), (SL3, 2), (heisenberg(), 1),
                                     (build_classical("C", 2), 2), (build_classical("D", 3), 3)])
def test_index(alg, ind):
    rep = index_estimate(alg)
    assert rep.index == ind
    assert rep.certified
    assert alg.dim - len(stabilizer(alg, rep.witness_point)) == rep.generic_rank_observed


def test_report_is_deterministic():
    assert index_estimate(SL3, seed=7).to_dict() == index_estimate(SL3, seed=7).to_dict()
    assert sample_points(4, 3, 1, 5) == sample_points(4, 3, 1, 5)
    assert all(p[0] == 0 for p in sample_points(3, 5, 0, 9, support=[1, 2]))


def test_failure_bound_and_b():
    assert failure_bound(3, 20, 10) == Fraction(2, 21) ** 20
    assert failure_bound(8, 1, 1) == 1
    assert b_value(8, 2) == 5
    with pytest.raises(ValueError):
        b_value(8, 1)


def test_jacobian_ranks_sl3():
    gens = classical_generators(SL3).polys
    lab = SL3.labels
    nilp = [Fraction(0)] * 8
    nilp[lab.index("E(2,1)")] = nilp[lab.index("E(3,2)")] = Fraction(1)
    semi = [Fraction(0)] * 8
    semi[0], semi[1] = Fraction(-1), Fraction(5)
    assert jacobian_rank(gens, semi) == 2
    assert jacobian_rank(gens, nilp) == 2
    assert jacobian_rank(gens, [Fraction(0)] * 8) == 0
    assert max_jacobian_rank(gens) == 2


def test_independence():
    cas = classical_generators(SL2).polys
    assert algebraic_independence([h * h, e * f])
    assert not algebraic_independence([h * h, h**4])
    assert is_central(SL2, cas[0])
    assert gradient_in_kernel(SL2, cas[0], [Fraction(1), Fraction(2), Fraction(3)])
