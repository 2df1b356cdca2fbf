"""Finite-order automorphisms and the periodic gradings they induce.

An automorphism is a matrix acting on coordinate columns: column ``j``
holds the coordinates of theta(e_j).  Gradings use the degree
representatives ``0 .. m-1``; q_k is the zeta^k-eigenspace, zeta being
the class of ``z`` in Q(zeta_m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import linalg
from .liealg import LieAlgebra, MatrixCoordinates, build_classical, change_basis, mat_mul, nth_power
from .scalars import canon, field_of, format_scalar, lift, zeta

ORDER_BOUND = 24


@dataclass(frozen=True, eq=False)
class Automorphism:
    matrix: tuple
    order: int
    kind: str | None = None  # "inner", "outer" or None when unknown

    @property
    def field(self) -> int:
        return field_of(x for row in self.matrix for x in row)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def apply(self, v):
        return linalg.matvec(self.matrix, v)


@dataclass(frozen=True, eq=False)
class ZmGrading:
    """q = q_0 + ... + q_{m-1} written in a graded basis.

    ``columns[i]`` are the original coordinates of graded basis vector i;
    ``algebra`` is the same Lie algebra rewritten in the graded basis.
    """

    m: int
    algebra: LieAlgebra
    degree: tuple
    columns: tuple
    original: LieAlgebra
    automorphism: Automorphism | None = None

    @property
    def component_dims(self):
        return [self.degree.count(k) for k in range(self.m)]

    def component(self, k: int):
        return [i for i, d in enumerate(self.degree) if d == k]

    @property
    def kind(self):
        return self.automorphism.kind if self.automorphism else None

    @property
    def field(self) -> int:
        """Cyclotomic order in which theta and its eigenvectors live."""
        f = field_of(x for col in self.columns for x in col)
        return math.lcm(f, self.m, self.automorphism.field if self.automorphism else 1)

    def zeta(self):
        """zeta_m inside Q(zeta_field)."""
        return lift(zeta(self.m), self.field) if self.m > 1 else Fraction(1)


# -- validation ----------------------------------------------------------------

def matrix_power_order(matrix, bound: int = ORDER_BOUND):
    """Smallest k in 1..bound with matrix^k = 1, or None."""
    current = matrix
    for k in range(1, bound + 1):
        if linalg.is_identity(current):
            return k
        current = linalg.matmul(current, matrix)
    return None


def bracket_defect(a: LieAlgebra, matrix):
    """First basis pair (i, j) with theta[e_i, e_j] != [theta e_i, theta e_j], or None."""
    cols = linalg.transpose(matrix)
    for i, j in combinations(range(a.dim), 2):
        lhs = linalg.matvec(matrix, [a.bracket_basis(i, j).get(k, 0) for k in range(a.dim)])
        rhs = a.bracket(cols[i], cols[j])
        if any(canon(x - y) for x, y in zip(lhs, rhs)):
            return (i, j)
    return None


def make_automorphism(a: LieAlgebra, matrix, kind=None, bound: int = ORDER_BOUND,
                      order: int | None = None) -> Automorphism:
    """Validate bracket preservation and compute the exact order."""
    matrix = tuple(tuple(canon(x) for x in row) for row in matrix)
    if len(matrix) != a.dim or any(len(r) != a.dim for r in matrix):
        raise ValueError(f"automorphism matrix must be {a.dim}x{a.dim}")
    bad = bracket_defect(a, matrix)
    if bad is not None:
        i, j = bad
        raise ValueError(f"map does not preserve the bracket on ({a.labels[i]}, {a.labels[j]})")
    found = matrix_power_order(matrix, bound)
    if found is None:
        raise ValueError(f"no finite order up to {bound}")
    if order is not None and order != found:
        raise ValueError(f"declared order {order} but the map has order {found}")
    return Automorphism(matrix, found, kind)


def identity_automorphism(a: LieAlgebra) -> Automorphism:
    return Automorphism(tuple(tuple(r) for r in linalg.identity(a.dim)), 1, "inner")


def matrix_map_automorphism(a: LieAlgebra, fn, kind=None, bound=ORDER_BOUND) -> Automorphism:
    """Automorphism induced by a map on realization matrices."""
    if a.realization is None:
        raise ValueError("matrix maps need a realization")
    coords = MatrixCoordinates(list(a.realization))
    cols = [coords(fn(m)) for m in a.realization]
    return make_automorphism(a, linalg.transpose(cols), kind, bound)


def inner_matrix(a: LieAlgebra, g, ginv=None):
    """Matrix of Ad(g) on ``a`` (not necessarily of finite order)."""
    ginv = ginv if ginv is not None else linalg.inverse(g)
    coords = MatrixCoordinates(list(a.realization))
    cols = [coords(mat_mul(mat_mul(g, m), ginv)) for m in a.realization]
    return linalg.transpose(cols)


def outer_sl_automorphism(n: int, K, d=None, bound: int = ORDER_BOUND):
    """x -> Ad(d)(-K x^T K^-1) on sl_n; returns (algebra, automorphism).

    The diagram automorphism of sl_2 is inner, so the kind is "inner" for
    n = 2 and "outer" for n >= 3.
    """
    if n < 2:
        raise ValueError("outer_sl needs n >= 2")
    a = build_classical("A", n - 1)
    K = [[canon(x) for x in row] for row in K]
    Kinv = linalg.inverse(K)
    if d is None:
        d = linalg.identity(n)
    elif not isinstance(d[0], (list, tuple)):
        d = [[canon(d[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    dinv = linalg.inverse(d)

    def fn(x):
        y = mat_mul(mat_mul(K, linalg.transpose(x)), Kinv)
        y = [[-v for v in row] for row in y]
        return mat_mul(mat_mul(d, y), dinv)

    return a, matrix_map_automorphism(a, fn, "outer" if n >= 3 else "inner", bound)


def cyclic_permutation_automorphism(h: LieAlgebra, n: int, inner: Automorphism):
    """(x_1, ..., x_n) -> (x_n, inner(x_1), x_2, ..., x_{n-1}) on h^n."""
    if n < 1:
        raise ValueError("need at least one copy")
    if n == 1:
        return nth_power(h, 1), inner
    big = nth_power(h, n)
    d = h.dim
    mat = [[Fraction(0)] * (n * d) for _ in range(n * d)]
    for r in range(d):
        mat[r][(n - 1) * d + r] = Fraction(1)
        for c in range(d):
            mat[d + r][c] = inner.matrix[r][c]
        for blk in range(2, n):
            mat[blk * d + r][(blk - 1) * d + r] = Fraction(1)
    aut = make_automorphism(big, mat, "outer", max(ORDER_BOUND, n * inner.order))
    if aut.order != n * inner.order:
        raise AssertionError(f"cyclic shift has order {aut.order}, expected {n * inner.order}")
    return big, aut


# -- gradings ------------------------------------------------------------------

def combo_label(vec, labels):
    terms = [(i, c) for i, c in enumerate(vec) if c]
    if len(terms) > 3:
        return None
    parts = []
    for i, c in terms:
        c = canon(c)
        if c == 1:
            parts.append(labels[i])
        elif c == -1:
            parts.append(f"-{labels[i]}")
        else:
            parts.append(f"({format_scalar(c)})*{labels[i]}")
    return "+".join(parts).replace("+-", "-")


def eigenspace_grading(a: LieAlgebra, t: Automorphism) -> ZmGrading:
    """Split ``a`` into zeta^k-eigenspaces of ``t`` over Q(zeta_L), L = lcm(field, m)."""
    if t.dim != a.dim:
        raise ValueError("automorphism dimension does not match the algebra")
    bad = bracket_defect(a, t.matrix)
    if bad is not None:
        raise ValueError(f"not an automorphism: bracket fails on {bad}")
    m = t.order
    order = math.lcm(t.field, m)
    z = lift(zeta(m), order) if m > 1 else Fraction(1)
    mat = [[lift(x, order) for x in row] for row in t.matrix]
    columns, degree, labels = [], [], []
    for k in range(m):
        ev = canon(z**k) if m > 1 else Fraction(1)
        shifted = [[canon(x - ev) if i == j else x for j, x in enumerate(row)]
                   for i, row in enumerate(mat)]
        for idx, v in enumerate(linalg.nullspace(shifted, a.dim)):
            columns.append(tuple(v))
            degree.append(k)
            labels.append(combo_label(v, a.labels) or f"g{k}[{idx}]")
    if len(columns) != a.dim:
        raise ValueError("automorphism is not diagonalizable over the chosen field")
    graded = change_basis(a, columns, labels, grading_m=m)
    return ZmGrading(m, graded, tuple(degree), tuple(columns), a, t)


def grading_from_degrees(a: LieAlgebra, degrees, m: int, kind=None) -> ZmGrading:
    """Grading of ``a`` in its own basis from a degree list; theta = zeta^deg."""
    degrees = tuple(int(d) % m for d in degrees)
    z = zeta(m) if m > 1 else Fraction(1)
    diag = [[canon(z ** degrees[i]) if i == j else Fraction(0) for j in range(a.dim)]
            for i in range(a.dim)]
    aut = Automorphism(tuple(tuple(r) for r in diag), m, kind)
    cols = tuple(tuple(v) for v in linalg.identity(a.dim))
    return ZmGrading(m, a, degrees, cols, a, aut)


def validate_grading(g: ZmGrading):
    """(True, None) or (False, (i, j)) for the first pair whose bracket has the wrong degree."""
    a, deg, m = g.algebra, g.degree, g.m
    for i, j in combinations(range(a.dim), 2):
        want = (deg[i] + deg[j]) % m
        if any(deg[k] != want for k in a.bracket_basis(i, j)):
            return False, (i, j)
    return True, None


def fixed_subalgebra(g: ZmGrading) -> LieAlgebra:
    """q_0 with induced structure; metadata["embedding"] lists its graded indices."""
    return subalgebra_on(g.algebra, g.component(0))


def subalgebra_on(a: LieAlgebra, idx) -> LieAlgebra:
    idx = list(idx)
    pos = {k: n for n, k in enumerate(idx)}
    structure = {}
    for x, y in combinations(range(len(idx)), 2):
        vec = a.bracket_basis(idx[x], idx[y])
        if any(k not in pos for k in vec):
            raise ValueError("index set is not closed under the bracket")
        if vec:
            structure[(x, y)] = {pos[k]: v for k, v in vec.items()}
    real = tuple(a.realization[i] for i in idx) if a.realization is not None else None
    return LieAlgebra(len(idx), structure, tuple(a.labels[i] for i in idx), real,
                      {"embedding": tuple(idx)})


def grading_automorphism(g: ZmGrading):
    """theta in the original basis rebuilt from the grading: P diag(zeta^deg) P^-1."""
    z = g.zeta()
    p = linalg.transpose([list(c) for c in g.columns])
    p = [[lift(x, g.field) for x in row] for row in p]
    d = [[canon(z ** g.degree[i]) if i == j else Fraction(0) for j in range(len(p))]
         for i in range(len(p))]
    return linalg.matmul(linalg.matmul(p, d), linalg.inverse(p))


# -- inner gradings from Kac labels --------------------------------------------

def _marks(series, rank):
    a = build_classical(series, rank)
    roots = [r for r in a.metadata["roots"] if r is not None]
    return max(roots, key=sum)


@dataclass(frozen=True)
class KacDiagramInner:
    """Labels (p_0, p_1, ..., p_l) on the extended Dynkin diagram; marks n_0 = 1."""

    series: str
    rank: int
    labels: tuple
    marks: tuple = field(init=False)

    def __post_init__(self):
        labels = tuple(int(p) for p in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.rank + 1:
            raise ValueError(f"need {self.rank + 1} labels for {self.series}{self.rank}, got {len(labels)}")
        if any(p < 0 for p in labels):
            raise ValueError("labels must be non-negative")
        if not any(labels):
            raise ValueError("labels must not all be zero")
        if math.gcd(*labels) != 1:
            raise ValueError(f"labels {labels} have gcd {math.gcd(*labels)}; need gcd 1")
        if self.series == "D" and self.rank < 3:
            raise ValueError("Kac labels need a simple algebra; D rank must be >= 3")
        object.__setattr__(self, "marks", (1,) + tuple(_marks(self.series, self.rank)))
        if self.m < 2:
            raise ValueError(f"labels {labels} give order {self.m}; need order >= 2")

    @property
    def m(self) -> int:
        return sum(n * p for n, p in zip(self.marks, self.labels))


def kac_degrees(a: LieAlgebra, d: KacDiagramInner):
    roots = a.metadata["roots"]
    return tuple(0 if r is None else sum(c * p for c, p in zip(r, d.labels[1:])) % d.m
                 for r in roots)


def grading_from_kac_inner(d: KacDiagramInner) -> ZmGrading:
    a = build_classical(d.series, d.rank)
    return grading_from_degrees(a, kac_degrees(a, d), d.m, "inner")


def lowest_root_degree(d: KacDiagramInner) -> int:
    """Degree of the lowest root vector, which should equal p_0."""
    return -sum(n * p for n, p in zip(d.marks[1:], d.labels[1:])) % d.m


# -- searching twisted diagram automorphisms -----------------------------------

def search_sl_twists(n: int, K, target_g0, order: int, field: int, target_g1=None):
    """Diagonal twists d = diag(1, zeta^k2, ...) with theta of the given order and q_0 = span(target_g0).

    Targets are lists of matrices; candidates are yielded as exponent tuples.
    """
    z = zeta(field)
    a = build_classical("A", n - 1)
    coords = MatrixCoordinates(list(a.realization))
    want0 = linalg.row_space_basis([coords(m) for m in target_g0])
    want1 = linalg.row_space_basis([coords(m) for m in target_g1]) if target_g1 else None
    for ks in product(range(field), repeat=n - 1):
        d = [Fraction(1)] + [canon(z**k) for k in ks]
        try:
            _, aut = outer_sl_automorphism(n, K, d)
        except ValueError:
            continue
        if aut.order != order:
            continue
        g = eigenspace_grading(a, aut)
        got0 = linalg.row_space_basis([list(g.columns[i]) for i in g.component(0)])
        if got0 != want0:
            continue
        if want1 is not None:
            got1 = linalg.row_space_basis([list(g.columns[i]) for i in g.component(1)])
            if got1 != want1:
                continue
        yield (0,) + ks
