"""Lie-Poisson brackets on S(q), the Poisson tensor, stabilizers and sampled ranks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .liealg import LieAlgebra
from .poly import Polynomial
from .scalars import canon, format_scalar

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 20
DEFAULT_BOX = 10
SYMBOLIC_DEGREE_LIMIT = 8


def _check(a: LieAlgebra, *polys):
    for p in polys:
        if p.nvars != a.dim:
            raise ValueError(f"polynomial in {p.nvars} variables on an algebra of dimension {a.dim}")


def _tensor_rows(a: LieAlgebra):
    """pi[i] = {j: linear polynomial sum_k c_ij^k x_k} for the full antisymmetric tensor."""
    rows = [dict() for _ in range(a.dim)]
    for (i, j), vec in a.structure.items():
        lin = Polynomial.linear([vec.get(k, 0) for k in range(a.dim)])
        rows[i][j] = lin
        rows[j][i] = -lin
    return rows


def hamiltonian_field(a: LieAlgebra, G: Polynomial):
    """Components {x_i, G} = sum_j pi_ij dG/dx_j, one polynomial per i."""
    _check(a, G)
    rows = _tensor_rows(a)
    used = set(G.variables())
    derivs = {j: G.derivative(j) for j in used}
    out = []
    for i in range(a.dim):
        acc = Polynomial.zero(a.dim)
        for j, lin in rows[i].items():
            if j in derivs:
                acc = acc + lin * derivs[j]
        out.append(acc)
    return out


def poisson_bracket(a: LieAlgebra, F: Polynomial, G: Polynomial) -> Polynomial:
    """{F, G} = sum_ij dF/dx_i dG/dx_j [x_i, x_j]."""
    _check(a, F, G)
    field = hamiltonian_field(a, G)
    acc = Polynomial.zero(a.dim)
    for i in F.variables():
        if field[i]:
            acc = acc + F.derivative(i) * field[i]
    return acc


def is_central(a: LieAlgebra, F: Polynomial, among=None) -> bool:
    """{x_i, F} = 0 for every basis vector (or every index in ``among``)."""
    field = hamiltonian_field(a, F)
    idx = range(a.dim) if among is None else among
    return not any(field[i] for i in idx)


def tensor_at(a: LieAlgebra, xi):
    """pi(xi)_ij = sum_k c_ij^k xi_k."""
    if len(xi) != a.dim:
        raise ValueError(f"point has {len(xi)} coordinates, expected {a.dim}")
    zero = Fraction(0)
    m = [[zero] * a.dim for _ in range(a.dim)]
    for (i, j), vec in a.structure.items():
        v = canon(sum((c * xi[k] for k, c in vec.items() if xi[k]), zero))
        if v:
            m[i][j] = v
            m[j][i] = -v
    return m


def stabilizer(a: LieAlgebra, xi):
    """Basis of q^xi = ker pi(xi)."""
    return linalg.nullspace(tensor_at(a, xi), a.dim)


def sample_points(dim: int, samples: int, seed: int, box: int, support=None):
    """Seeded integer points in [-box, box]^dim; coordinates outside ``support`` are zero."""
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    keep = set(range(dim)) if support is None else set(support)
    pts = []
    for _ in range(samples):
        pts.append(tuple(Fraction(rng.randint(-box, box)) if i in keep else Fraction(0)
                         for i in range(dim)))
    return pts


def failure_bound(dim: int, samples: int, box: int) -> Fraction:
    """Schwartz-Zippel bound on missing the generic rank: (R / (2 box + 1))^samples, R <= dim even."""
    r = dim - dim % 2
    return min(Fraction(1), Fraction(r, 2 * box + 1) ** samples)


@dataclass(frozen=True)
class IndexReport:
    dim: int
    generic_rank_observed: int
    index_upper_bound: int
    samples: int
    seed: int
    box: int
    witness_point: tuple
    failure_bound: Fraction
    certified: bool = True

    @property
    def index(self) -> int:
        return self.index_upper_bound

    def to_dict(self):
        return {
            "dim": self.dim,
            "generic_rank_observed": self.generic_rank_observed,
            "index_upper_bound": self.index_upper_bound,
            "samples": self.samples,
            "seed": self.seed,
            "box": self.box,
            "witness_point": [format_scalar(x) for x in self.witness_point],
            "failure_bound": str(self.failure_bound),
            "certified": self.certified,
        }


def index_estimate(a: LieAlgebra, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                   box: int = DEFAULT_BOX, support=None) -> IndexReport:
    """dim - max rank of pi over seeded points: an exact upper bound on the index."""
    best, witness = -1, None
    for pt in sample_points(a.dim, samples, seed, box, support):
        r = linalg.rank(tensor_at(a, pt))
        if r > best:
            best, witness = r, pt
    return IndexReport(a.dim, best, a.dim - best, samples, seed, box, witness,
                       failure_bound(a.dim, samples, box))


def b_value(dim: int, idx: int) -> int:
    """(dim + ind) / 2; odd sums mean the index is wrong."""
    if (dim + idx) % 2:
        raise ValueError(f"dim {dim} + index {idx} is odd; the index must be wrong")
    return (dim + idx) // 2


def _bracket_at(a, F, G, pt):
    pi = tensor_at(a, pt)
    gf, gg = F.gradient(pt), G.gradient(pt)
    total = Fraction(0)
    for i, x in enumerate(gf):
        if x:
            row = pi[i]
            total = total + x * sum((row[j] * y for j, y in enumerate(gg) if y and row[j]), Fraction(0))
    return canon(total)


def commutes(a: LieAlgebra, F: Polynomial, G: Polynomial, mode: str = "auto",
             samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, box: int = DEFAULT_BOX) -> bool:
    """{F, G} = 0, exactly (symbolic) or at seeded points (sampled)."""
    if mode == "auto":
        mode = "symbolic" if F.degree() + G.degree() - 1 <= SYMBOLIC_DEGREE_LIMIT else "sampled"
    if mode == "symbolic":
        return poisson_bracket(a, F, G).is_zero()
    if mode == "sampled":
        return all(not _bracket_at(a, F, G, pt) for pt in sample_points(a.dim, samples, seed, box))
    raise ValueError(f"unknown mode {mode!r}; expected symbolic, sampled or auto")


def jacobian_rank(polys, xi) -> int:
    if not polys:
        return 0
    return linalg.rank([p.gradient(xi) for p in polys])


def algebraic_independence(polys, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                           box: int = DEFAULT_BOX) -> bool:
    """Some seeded point has Jacobian rank equal to the number of polynomials."""
    if not polys:
        return True
    n = polys[0].nvars
    return any(jacobian_rank(polys, pt) == len(polys) for pt in sample_points(n, samples, seed, box))


def max_jacobian_rank(polys, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, box=DEFAULT_BOX) -> int:
    if not polys:
        return 0
    n = polys[0].nvars
    return max(jacobian_rank(polys, pt) for pt in sample_points(n, samples, seed, box))


def gradient_in_kernel(a: LieAlgebra, F: Polynomial, xi) -> bool:
    """pi(xi) d_xi F = 0."""
    return not any(linalg.matvec(tensor_at(a, xi), F.gradient(xi)))
