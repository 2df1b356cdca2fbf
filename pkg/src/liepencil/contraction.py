"""The contraction pencil of a periodic grading and the semidirect product g0 x g(inf).

For x in q_i, y in q_j (degrees in 0..m-1) the bracket splits as
{,} = {,}_0 + {,}_inf with {,}_0 keeping pairs with i + j <= m - 1 and
{,}_inf keeping the rest.  q(t) uses {,}_0 + t {,}_inf.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .grading import (ZmGrading, combo_label, cyclic_permutation_automorphism, eigenspace_grading,
                      fixed_subalgebra)
from .liealg import (LieAlgebra, _sparse_add, change_basis, direct_sum, jacobi_check, mat_mul,
                     mat_trace)
from .scalars import canon

INF = "inf"


@dataclass(frozen=True, eq=False)
class PencilMember:
    t: object  # a scalar or INF
    algebra: LieAlgebra
    weights: tuple | None = None  # N_0-grading of the limit, when there is one


def _split(g: ZmGrading):
    deg, m = g.degree, g.m
    low, high = {}, {}
    for key, vec in g.algebra.structure.items():
        i, j = key
        (low if deg[i] + deg[j] <= m - 1 else high)[key] = dict(vec)
    return low, high


def _with_structure(a: LieAlgebra, structure, **meta) -> LieAlgebra:
    metadata = {k: v for k, v in a.metadata.items() if k not in ("rank",)}
    metadata.update(meta)
    return LieAlgebra(a.dim, structure, a.labels, None, metadata)


def contract_zero(g: ZmGrading) -> PencilMember:
    low, _ = _split(g)
    return PencilMember(Fraction(0), _with_structure(g.algebra, low), tuple(g.degree))


def infinity_weights(g: ZmGrading):
    """q(inf)[i] = q_{m-i}: weight m - k on q_k (k >= 1) and m on q_0."""
    return tuple(g.m - d for d in g.degree)


def contract_infty(g: ZmGrading) -> PencilMember:
    _, high = _split(g)
    return PencilMember(INF, _with_structure(g.algebra, high), infinity_weights(g))


def pencil_member(g: ZmGrading, t) -> PencilMember:
    if t == INF:
        return contract_infty(g)
    t = canon(t)
    low, high = _split(g)
    structure = {k: dict(v) for k, v in low.items()}
    if t:
        for key, vec in high.items():
            _sparse_add(structure.setdefault(key, {}), vec, t)
    structure = {k: v for k, v in structure.items() if v}
    return PencilMember(t, _with_structure(g.algebra, structure))


def same_structure(a: LieAlgebra, b: LieAlgebra) -> bool:
    if a.dim != b.dim:
        return False
    keys = set(a.structure) | set(b.structure)
    return all(a.structure.get(k, {}) == b.structure.get(k, {}) for k in keys)


def add_structures(a: LieAlgebra, b: LieAlgebra, scale=1) -> LieAlgebra:
    structure = {k: dict(v) for k, v in a.structure.items()}
    for key, vec in b.structure.items():
        _sparse_add(structure.setdefault(key, {}), vec, scale)
    return _with_structure(a, {k: v for k, v in structure.items() if v})


def phi_transport(a: LieAlgebra, weights, s) -> LieAlgebra:
    """Bracket pulled back along phi_s (x -> s^w x): c_ij^k becomes s^(w_i + w_j - w_k) c_ij^k."""
    s = canon(s)
    structure = {}
    for (i, j), vec in a.structure.items():
        out = {}
        for k, c in vec.items():
            e = weights[i] + weights[j] - weights[k]
            out[k] = canon(c * (s**e if e >= 0 else 1 / s ** (-e)))
        structure[(i, j)] = out
    return _with_structure(a, structure)


def phi_contraction(a: LieAlgebra, weights) -> LieAlgebra:
    """The s -> 0 limit of :func:`phi_transport`; raises if some exponent is negative."""
    structure = {}
    for (i, j), vec in a.structure.items():
        out = {}
        for k, c in vec.items():
            e = weights[i] + weights[j] - weights[k]
            if e < 0:
                raise ValueError(
                    f"limit does not exist: [{a.labels[i]}, {a.labels[j]}] has a "
                    f"{a.labels[k]} term of negative weight shift {e}")
            if e == 0:
                out[k] = c
        if out:
            structure[(i, j)] = out
    return _with_structure(a, structure)


def mixed_jacobiator_defect(b0: LieAlgebra, b1: LieAlgebra):
    """First triple where sum_cyc b0(x, b1(y, z)) + b1(x, b0(y, z)) != 0, or None."""
    for i, j, k in combinations(range(b0.dim), 3):
        acc: dict = {}
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            for w, c in b1.bracket_basis(y, z).items():
                _sparse_add(acc, b0.bracket_basis(x, w), c)
            for w, c in b0.bracket_basis(y, z).items():
                _sparse_add(acc, b1.bracket_basis(x, w), c)
        if acc:
            return (i, j, k)
    return None


def compatibility_check(b0: LieAlgebra, binf: LieAlgebra):
    """(ok, reason): every a*b0 + b*binf is a Lie bracket."""
    if b0.dim != binf.dim:
        raise ValueError("brackets live on spaces of different dimension")
    for name, alg in (("first", b0), ("second", binf)):
        ok, triple = jacobi_check(alg)
        if not ok:
            return False, f"{name} bracket fails Jacobi on {triple}"
    triple = mixed_jacobiator_defect(b0, binf)
    if triple is not None:
        return False, f"mixed Jacobiator nonzero on {triple}"
    return True, None


# -- g0 x g(inf) -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SemidirectAlgebra:
    """Basis g0^d, g_{m-1}, ..., g_1, g0^ab with tilde-phi weights 0, 1, ..., m-1, m.

    ``origin[b]`` is (part, graded index) with part "d", "g" or "ab".
    """

    algebra: LieAlgebra
    weights: tuple
    origin: tuple
    grading: ZmGrading

    @property
    def m(self):
        return self.grading.m

    def part(self, name):
        return [b for b, (p, _) in enumerate(self.origin) if p == name]

    def of_degree(self, k: int):
        """Indices coming from g_k (k >= 1)."""
        return [b for b, (p, i) in enumerate(self.origin) if p == "g" and self.grading.degree[i] == k]


def _power_label(label, w):
    if any(ch in label[1:] for ch in "+-") or label.startswith("-"):
        label = f"({label})"
    return f"{label}*t^{w}"


def semidirect_tilde(g: ZmGrading, labels=None) -> SemidirectAlgebra:
    m, deg, a = g.m, g.degree, g.algebra
    names = list(labels) if labels is not None else list(a.labels)
    zero = g.component(0)
    origin = [("d", i) for i in zero]
    for k in range(m - 1, 0, -1):
        origin += [("g", i) for i in g.component(k)]
    origin += [("ab", i) for i in zero]
    where = {o: b for b, o in enumerate(origin)}
    weights = tuple(0 if p == "d" else m if p == "ab" else m - deg[i] for p, i in origin)

    def image(part_of_target, vec, scale=1):
        out = {}
        for k, c in vec.items():
            if part_of_target == "g" and deg[k] == 0:
                out[where[("ab", k)]] = canon(c * scale)
            else:
                out[where[(part_of_target, k)]] = canon(c * scale)
        return out

    structure = {}
    for x, y in combinations(range(len(origin)), 2):
        (px, i), (py, j) = origin[x], origin[y]
        vec = a.bracket_basis(i, j)
        if not vec:
            continue
        if px == "d" and py == "d":
            out = image("d", vec)
        elif px == "d":
            out = image(py, vec)
        elif py == "d":
            out = image(px, vec)
        elif px == "g" and py == "g" and deg[i] + deg[j] >= m:
            out = image("g", vec)
        else:
            out = {}
        if out:
            structure[(x, y)] = out
    blabels = tuple(_power_label(names[i], w) for (_, i), w in zip(origin, weights))
    alg = LieAlgebra(len(origin), structure, blabels, None,
                     {"rank": None, "tilde_of": g.algebra.dim})
    return SemidirectAlgebra(alg, weights, tuple(origin), g)


def sum_in_tilde_basis(sd: SemidirectAlgebra) -> LieAlgebra:
    """g0 + g rewritten in the basis d(y) = (y, y), (0, x), ab(y) = (-y, y)/2."""
    g = sd.grading
    zero = g.component(0)
    g0 = fixed_subalgebra(g)
    total = direct_sum(g0, g.algebra)
    r = g0.dim
    pos0 = {i: n for n, i in enumerate(zero)}
    half = Fraction(1, 2)
    cols = []
    for p, i in sd.origin:
        v = [Fraction(0)] * total.dim
        if p == "d":
            v[pos0[i]], v[r + i] = Fraction(1), Fraction(1)
        elif p == "ab":
            v[pos0[i]], v[r + i] = -half, half
        else:
            v[r + i] = Fraction(1)
        cols.append(v)
    return change_basis(total, cols, sd.algebra.labels)


def tilde_consistency(sd: SemidirectAlgebra) -> bool:
    """The tilde-phi limit of g0 + g equals the direct construction."""
    return same_structure(phi_contraction(sum_in_tilde_basis(sd), sd.weights), sd.algebra)


def tilde_g_for_chain(h: LieAlgebra, n: int, inner):
    """g0 x g(inf) for the cyclic automorphism of h^n built from ``inner``.

    Basis vectors are labeled by their last h-component and the power of t.
    """
    big, aut = cyclic_permutation_automorphism(h, n, inner)
    g = eigenspace_grading(big, aut)
    last = [combo_label(col[(n - 1) * h.dim:], h.labels) or g.algebra.labels[i]
            for i, col in enumerate(g.columns)]
    return semidirect_tilde(g, last)


def last_block(sd: SemidirectAlgebra, b: int, block_size: int):
    """The realization matrix of the last diagonal block of the source of basis vector b."""
    g = sd.grading
    mat = g.algebra.realization[sd.origin[b][1]]
    start = len(mat) - block_size
    return [row[start:] for row in mat[start:]]


def tilde_trace_functional(sd: SemidirectAlgebra, by_weight: dict, block_size: int):
    """gamma(b) = tr(M_w . last block of b) where w is the tilde weight of b."""
    coords = []
    for b, w in enumerate(sd.weights):
        mat = by_weight.get(w)
        coords.append(mat_trace(mat_mul(mat, last_block(sd, b, block_size))) if mat else Fraction(0))
    return coords
