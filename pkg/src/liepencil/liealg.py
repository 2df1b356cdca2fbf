"""Finite-dimensional Lie algebras given by sparse structure constants.

Basis conventions for :func:`build_classical` (frozen; golden outputs
depend on them):

* The realization is the defining representation on K^N.  Types B, C, D
  use the anti-diagonal form ``J`` (symmetric for B/D, ``J[i][N-1-i] = +1``
  for ``i < N/2`` and ``-1`` otherwise for C), so the diagonal matrices in
  the algebra form a Cartan subalgebra and the upper triangular ones a Borel.
* Cartan elements come first: ``H1 .. Hl`` with ``Hi = E(i,i) - E(i+1,i+1)``
  for type A and ``Hi = E(i,i) - E(i',i')`` (``i' = N+1-i``) otherwise.
* Then positive root vectors ordered by (height, row, column) of their
  representative matrix unit, then negative root vectors ordered by
  (depth, column, row).
  For B/C/D a root vector is ``E(a,b) - s E(b',a')`` with the sign forced
  by the form; the label is ``E(a,b)`` of the representative entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .scalars import canon, field_of, format_scalar, parse_scalar

SERIES = ("A", "B", "C", "D")


def _sparse_add(acc, vec, scale=1):
    for k, v in vec.items():
        nv = acc.get(k, 0) + scale * v
        if nv:
            acc[k] = canon(nv)
        else:
            acc.pop(k, None)
    return acc


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c_ij^k e_k`` stored for i < j."""

    dim: int
    structure: dict
    labels: tuple
    realization: tuple | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise ValueError(f"{len(self.labels)} labels for dimension {self.dim}")
        for (i, j), vec in self.structure.items():
            if not 0 <= i < j < self.dim:
                raise ValueError(f"structure key {(i, j)} must satisfy 0 <= i < j < dim")
            if any(not 0 <= k < self.dim for k in vec):
                raise ValueError(f"structure value for {(i, j)} out of range")
        if self.realization is not None and len(self.realization) != self.dim:
            raise ValueError("realization must list one matrix per basis vector")

    # -- structure ---------------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> dict:
        """Sparse [e_i, e_j]."""
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -v for k, v in self.structure.get((j, i), {}).items()}

    def bracket(self, x, y):
        """Bracket of coefficient vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        acc: dict = {}
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            for j, b in ys:
                if i != j:
                    _sparse_add(acc, self.bracket_basis(i, j), a * b)
        return [acc.get(k, Fraction(0)) for k in range(self.dim)]

    def bracket_sparse(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                if i != j:
                    _sparse_add(acc, self.bracket_basis(i, j), a * b)
        return acc

    def ad(self, i: int):
        """Matrix of ad(e_i) (columns = images of basis vectors)."""
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, v in self.bracket_basis(i, j).items():
                m[k][j] = v
        return m

    def is_abelian(self) -> bool:
        return not any(self.structure.values())

    def field(self) -> int:
        return field_of(v for vec in self.structure.values() for v in vec.values())

    def basis_vector(self, i: int):
        return [Fraction(int(k == i)) for k in range(self.dim)]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    # -- serialization -----------------------------------------------------
    def to_json(self) -> str:
        order = self.field()
        triples = []
        for (i, j) in sorted(self.structure):
            for k in sorted(self.structure[(i, j)]):
                triples.append([i, j, k, format_scalar(self.structure[(i, j)][k])])
        doc = {"format": 1, "dim": self.dim, "field": order, "labels": list(self.labels),
               "constants": triples}
        return json.dumps(doc, indent=None, separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> LieAlgebra:
        doc = json.loads(text)
        order = doc.get("field", 1)
        structure: dict = {}
        for i, j, k, s in doc["constants"]:
            structure.setdefault((i, j), {})[k] = parse_scalar(s, order)
        return cls(doc["dim"], structure, tuple(doc["labels"]))


def from_structure(dim, triples, labels=None, **metadata) -> LieAlgebra:
    """Build from triples (i, j, k, c) meaning c_ij^k = c; i > j entries are folded by antisymmetry."""
    structure: dict = {}
    for i, j, k, c in triples:
        c = canon(c)
        if i == j or not c:
            continue
        if i > j:
            i, j, c = j, i, -c
        vec = structure.setdefault((i, j), {})
        vec[k] = canon(vec.get(k, 0) + c)
        if not vec[k]:
            del vec[k]
    structure = {key: v for key, v in structure.items() if v}
    labels = tuple(labels) if labels is not None else tuple(f"x{i}" for i in range(dim))
    return LieAlgebra(dim, structure, labels, None, dict(metadata))


def abelian(dim: int) -> LieAlgebra:
    return from_structure(dim, [], [f"a{i}" for i in range(dim)])


def heisenberg() -> LieAlgebra:
    """Basis (x, y, z) with [x, y] = z."""
    return from_structure(3, [(0, 1, 2, 1)], ["x", "y", "z"])


# -- matrices --------------------------------------------------------------

def mat_mul(a, b):
    n, p = len(a), len(b[0])
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for k, x in enumerate(ai):
            if x:
                bk = b[k]
                oi = out[i]
                for j in range(p):
                    if bk[j]:
                        oi[j] = oi[j] + x * bk[j]
    return [[canon(x) for x in row] for row in out]


def mat_comm(a, b):
    ab, ba = mat_mul(a, b), mat_mul(b, a)
    return [[canon(x - y) for x, y in zip(r, s)] for r, s in zip(ab, ba)]


def mat_lin(coeffs, mats):
    n = len(mats[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, m in zip(coeffs, mats):
        if c:
            for i in range(n):
                for j in range(n):
                    if m[i][j]:
                        out[i][j] = out[i][j] + c * m[i][j]
    return [[canon(x) for x in row] for row in out]


def mat_trace(a):
    return canon(sum((a[i][i] for i in range(len(a))), Fraction(0)))


def unit(n, i, j, c=1):
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(c)
    return m


class MatrixCoordinates:
    """Coordinates of matrices in the span of a fixed list of matrices."""

    def __init__(self, mats):
        self.n = len(mats[0])
        flat = [[m[i][j] for m in mats] for i in range(self.n) for j in range(self.n)]
        red, pivots = linalg.rref(linalg.transpose(flat))
        if len(pivots) != len(mats):
            raise ValueError("matrices are linearly dependent")
        self.entries = pivots
        square = [flat[p] for p in pivots]
        self.inv = linalg.inverse(square)
        self.mats = mats

    def __call__(self, mat, check=True):
        n = self.n
        rhs = [mat[p // n][p % n] for p in self.entries]
        coords = linalg.matvec(self.inv, rhs)
        if check:
            back = mat_lin(coords, self.mats)
            if any(back[i][j] != mat[i][j] for i in range(n) for j in range(n)):
                raise ValueError("matrix is not in the span of the realization")
        return coords


def from_matrices(mats, labels, **metadata) -> LieAlgebra:
    """Lie algebra spanned by closed-under-commutator matrices."""
    mats = [[[canon(x) for x in row] for row in m] for m in mats]
    coords = MatrixCoordinates(mats)
    structure = {}
    for i, j in combinations(range(len(mats)), 2):
        c = coords(mat_comm(mats[i], mats[j]))
        vec = {k: v for k, v in enumerate(c) if v}
        if vec:
            structure[(i, j)] = vec
    return LieAlgebra(len(mats), structure, tuple(labels), tuple(mats), dict(metadata))


def _form_signs(series, size):
    if series in ("B", "D"):
        return [1] * size
    half = size // 2
    return [1] * half + [-1] * half


def classical_matrices(series: str, rank: int):
    """Matrix basis, labels, matrix size and root pairs (None for Cartan) in the documented order."""
    if series not in SERIES:
        raise ValueError(f"unknown series {series!r}; expected one of {SERIES}")
    if rank < 1 or (series == "D" and rank < 2):
        raise ValueError(f"invalid rank {rank} for series {series}")
    if series == "A":
        n = rank + 1
        cartan = [(f"H{i + 1}", [[Fraction(int(a == b) * (1 if a == i else -1 if a == i + 1 else 0))
                                   for b in range(n)] for a in range(n)]) for i in range(rank)]
        pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
        vec = {p: unit(n, *p) for p in pairs}
    else:
        n = {"B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[series]
        eps = _form_signs(series, n)
        prime = lambda a: n - 1 - a  # noqa: E731
        cartan = []
        for i in range(rank):
            m = unit(n, i, i)
            m[prime(i)][prime(i)] = Fraction(-1)
            cartan.append((f"H{i + 1}", m))
        vec = {}
        seen = set()
        for a in range(n):
            for b in range(n):
                if a == b or (a, b) in seen:
                    continue
                partner = (prime(b), prime(a))
                s = Fraction(eps[prime(a)], eps[prime(b)])
                if partner == (a, b):
                    if s == 1:  # X_ab = -X_ab forces zero
                        seen.add((a, b))
                        continue
                    vec[(a, b)] = unit(n, a, b)
                else:
                    m = unit(n, a, b)
                    m[partner[0]][partner[1]] = -s
                    vec[(a, b)] = m
                seen.add((a, b))
                seen.add(partner)
    pos = sorted((p for p in vec if p[0] < p[1]), key=lambda p: (_height(series, rank, n, p), p))
    neg = sorted((p for p in vec if p[0] > p[1]), key=lambda p: (-_height(series, rank, n, p), p[::-1]))
    labels = [lbl for lbl, _ in cartan]
    mats = [m for _, m in cartan]
    for p in pos + neg:
        labels.append(f"E({p[0] + 1},{p[1] + 1})")
        mats.append(vec[p])
    return mats, labels, n, [None] * rank + pos + neg


def root_coefficients(series, rank, n, pair):
    """Coefficients, over the Bourbaki simple roots, of the root carried by matrix unit ``pair``."""
    a, b = pair
    if series == "A":
        lo, hi = min(a, b), max(a, b)
        sign = 1 if a < b else -1
        return tuple(sign * int(lo <= i < hi) for i in range(rank))

    def eps(i):
        v = [0] * rank
        if i < rank:
            v[i] = 1
        elif i >= n - rank:
            v[n - 1 - i] = -1
        return v

    # simple roots e_i - e_{i+1}, then e_l / 2e_l / e_{l-1} + e_l
    simple = []
    for i in range(rank - 1):
        s = [0] * rank
        s[i], s[i + 1] = 1, -1
        simple.append(s)
    last = [0] * rank
    if series == "B":
        last[rank - 1] = 1
    elif series == "C":
        last[rank - 1] = 2
    else:
        last[rank - 2], last[rank - 1] = 1, 1
    simple.append(last)
    root = [x - y for x, y in zip(eps(a), eps(b))]
    sol = linalg.solve([[Fraction(s[k]) for s in simple] for k in range(rank)],
                       [Fraction(x) for x in root])
    return tuple(int(c) for c in sol)


def _height(series, rank, n, pair):
    return sum(root_coefficients(series, rank, n, pair))


def build_classical(series: str, rank: int) -> LieAlgebra:
    """sl_{n}, so_{2n+1}, sp_{2n}, so_{2n} in the documented split realization."""
    mats, labels, n, pairs = classical_matrices(series, rank)
    roots = tuple(None if p is None else root_coefficients(series, rank, n, p) for p in pairs)
    return from_matrices(
        mats, labels, series=series, rank=rank,
        blocks=((series, rank, 0, n),), roots=roots,
    )


def jacobi_check(a: LieAlgebra):
    """(True, None) or (False, (i, j, k)) for the first violating basis triple."""
    for i, j, k in combinations(range(a.dim), 3):
        acc: dict = {}
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            inner = a.bracket_basis(y, z)
            for w, c in inner.items():
                _sparse_add(acc, a.bracket_basis(x, w), c)
        if acc:
            return False, (i, j, k)
    return True, None


def realization_check(a: LieAlgebra) -> bool:
    """Matrix commutators reproduce the structure constants."""
    if a.realization is None:
        return True
    mats = a.realization
    for i, j in combinations(range(a.dim), 2):
        lhs = mat_comm(mats[i], mats[j])
        rhs = mat_lin([a.bracket_basis(i, j).get(k, 0) for k in range(a.dim)], mats)
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class InvariantForm:
    gram: tuple

    def __call__(self, x, y):
        return canon(sum((xi * g * yj for xi, row in zip(x, self.gram) if xi
                          for g, yj in zip(row, y) if g and yj), Fraction(0)))


def trace_form(a: LieAlgebra) -> InvariantForm:
    """Trace form of the defining representation: gram_ij = tr(M_i M_j)."""
    if a.realization is None:
        raise ValueError("trace form needs a matrix realization")
    mats = a.realization
    gram = tuple(tuple(mat_trace(mat_mul(mats[i], mats[j])) for j in range(a.dim))
                 for i in range(a.dim))
    return InvariantForm(gram)


def form_invariance_defect(a: LieAlgebra, form: InvariantForm):
    """First basis triple violating B([x,y],z) + B(y,[x,z]) = 0, or None."""
    g = form.gram
    for x in range(a.dim):
        for y in range(a.dim):
            for z in range(a.dim):
                s = sum((c * g[k][z] for k, c in a.bracket_basis(x, y).items()), Fraction(0))
                s += sum((c * g[y][k] for k, c in a.bracket_basis(x, z).items()), Fraction(0))
                if s:
                    return (x, y, z)
    return None


def dual_basis_matrices(a: LieAlgebra):
    """Matrices M^b with tr(M^b M_c) = delta_bc (requires nondegenerate trace form)."""
    gram = [list(r) for r in trace_form(a).gram]
    inv = linalg.inverse(gram)
    return [mat_lin([inv[a_][b] for a_ in range(a.dim)], a.realization) for b in range(a.dim)]


def change_basis(a: LieAlgebra, columns, labels=None, **metadata) -> LieAlgebra:
    """Rewrite ``a`` in the basis whose i-th vector has coordinates columns[i]."""
    n = a.dim
    pmat = [[columns[j][i] for j in range(n)] for i in range(n)]
    pinv = linalg.inverse(pmat)
    structure = {}
    for i, j in combinations(range(n), 2):
        br = a.bracket(columns[i], columns[j])
        new = linalg.matvec(pinv, br)
        vec = {k: v for k, v in enumerate(new) if v}
        if vec:
            structure[(i, j)] = vec
    real = None
    if a.realization is not None:
        real = tuple(mat_lin(col, a.realization) for col in columns)
    meta = dict(a.metadata)
    meta.update(metadata)
    return LieAlgebra(n, structure, tuple(labels) if labels else tuple(f"v{i}" for i in range(n)),
                      real, meta)


def direct_sum(a: LieAlgebra, b: LieAlgebra, suffixes=("1", "2")) -> LieAlgebra:
    """Block direct sum; labels get ``_<copy>`` suffixes."""
    return _sum_of([a, b], suffixes)


def nth_power(h: LieAlgebra, n: int) -> LieAlgebra:
    return _sum_of([h] * n, [str(c + 1) for c in range(n)])


def _sum_of(parts, suffixes):
    structure = {}
    labels = []
    offset = 0
    mats = [] if all(p.realization is not None for p in parts) else None
    total_n = sum(len(p.realization[0]) for p in parts) if mats is not None else 0
    row = 0
    blocks = []
    for p, suf in zip(parts, suffixes):
        for (i, j), vec in p.structure.items():
            structure[(i + offset, j + offset)] = {k + offset: v for k, v in vec.items()}
        labels.extend(f"{lbl}_{suf}" for lbl in p.labels)
        if mats is not None:
            size = len(p.realization[0])
            for m in p.realization:
                big = [[Fraction(0)] * total_n for _ in range(total_n)]
                for r in range(size):
                    for c in range(size):
                        big[row + r][row + c] = m[r][c]
                mats.append(big)
            for (s, rk, start, sz) in p.metadata.get("blocks", ()):
                blocks.append((s, rk, start + row, sz))
            row += size
        offset += p.dim
    meta = {"rank": sum(p.metadata.get("rank", 0) for p in parts) or None}
    if blocks:
        meta["blocks"] = tuple(blocks)
    return LieAlgebra(offset, structure, tuple(labels),
                      tuple(mats) if mats is not None else None, meta)


def span_of_brackets(a: LieAlgebra, vectors):
    """RREF basis of [a, span(vectors)]."""
    out = []
    for i in range(a.dim):
        for v in vectors:
            sv = {k: x for k, x in enumerate(v) if x}
            br = a.bracket_sparse({i: Fraction(1)}, sv)
            if br:
                out.append([br.get(k, Fraction(0)) for k in range(a.dim)])
    return linalg.row_space_basis(out)


def lower_central_series(a: LieAlgebra):
    """Dimensions of a, [a,a], [a,[a,a]], ... until the dimension stabilizes."""
    dims = [a.dim]
    current = [a.basis_vector(i) for i in range(a.dim)]
    while dims[-1] > 0:
        current = span_of_brackets(a, current)
        dims.append(len(current))
        if dims[-1] == dims[-2]:
            break
    return dims


def center(a: LieAlgebra):
    """Basis of the centre (kernel of x -> ad x on all basis vectors)."""
    rows = []
    for j in range(a.dim):
        ad_cols = [a.bracket_basis(i, j) for i in range(a.dim)]
        for k in range(a.dim):
            rows.append([ad_cols[i].get(k, Fraction(0)) for i in range(a.dim)])
    return linalg.nullspace(rows, a.dim)
