"""Symmetric invariants, their theta-eigenvalues and phi-weight decompositions.

Generators live in S(q) with one variable per basis vector.  A point xi of
q* is identified with the matrix X = sum_b xi_b M^b, where M^b is the
trace-form dual basis, so ``tr(X^k)`` is an invariant polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from . import linalg
from .contraction import SemidirectAlgebra, contract_infty, contract_zero, pencil_member
from .grading import ZmGrading, fixed_subalgebra
from .liealg import LieAlgebra, center, mat_lin, trace_form
from .poisson import (DEFAULT_BOX, DEFAULT_SAMPLES, DEFAULT_SEED, algebraic_independence,
                      commutes, gradient_in_kernel, index_estimate, is_central, max_jacobian_rank,
                      sample_points)
from .poly import Polynomial
from .scalars import canon, lift, parse_scalar


@dataclass(frozen=True, eq=False)
class InvariantGenerator:
    poly: Polynomial
    name: str
    theta_exponent: int | None = None

    @property
    def degree(self) -> int:
        return self.poly.degree()

    def components(self, weights) -> dict:
        return phi_decompose(self.poly, weights)

    def top(self, weights):
        w, p = max(self.components(weights).items())
        return w, p

    def bottom(self, weights):
        w, p = min(self.components(weights).items())
        return w, p


@dataclass(frozen=True, eq=False)
class InvariantSet:
    generators: tuple
    algebra: LieAlgebra
    rank: int

    @property
    def degrees(self):
        return [g.degree for g in self.generators]

    @property
    def polys(self):
        return [g.poly for g in self.generators]

    def __len__(self):
        return len(self.generators)


# -- polynomial matrices ---------------------------------------------------------

def _pmat_mul(a, b):
    n, p, inner = len(a), len(b[0]), len(b)
    zero = Polynomial.zero(a[0][0].nvars)
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for k in range(inner):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def _pmat_trace(a):
    acc = Polynomial.zero(a[0][0].nvars)
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def _power_traces(X, top):
    """[tr X, tr X^2, ..., tr X^top]."""
    out, P = [], X
    for k in range(1, top + 1):
        if k > 1:
            P = _pmat_mul(P, X)
        out.append(_pmat_trace(P))
    return out


def _elementary_from_traces(p):
    """Newton: e_k = (1/k) sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i, for k = 0..len(p)."""
    nv = p[0].nvars
    e = [Polynomial.constant(nv, 1)]
    for k in range(1, len(p) + 1):
        acc = Polynomial.zero(nv)
        for i in range(1, k + 1):
            term = e[k - i] * p[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(acc.scale(Fraction(1, k)))
    return e


def _pfaffian(M):
    n = len(M)
    if n == 0:
        return Polynomial.constant(M and M[0][0].nvars or 0, 1)
    if n == 2:
        return M[0][1]
    acc = Polynomial.zero(M[0][0].nvars)
    for j in range(1, n):
        if not M[0][j]:
            continue
        rest = [k for k in range(1, n) if k != j]
        minor = [[M[r][c] for c in rest] for r in rest]
        term = M[0][j] * _pfaffian(minor)
        acc = acc + term if j % 2 == 1 else acc - term
    return acc


def coadjoint_matrix(a: LieAlgebra, dual=None):
    """X = sum_b x_b M^b as a matrix of linear polynomials."""
    if a.realization is None:
        raise ValueError("classical generators need a matrix realization")
    if dual is None:
        gram = [list(r) for r in trace_form(a).gram]
        inv = linalg.inverse(gram)
        dual = [mat_lin([inv[c][b] for c in range(a.dim)], a.realization) for b in range(a.dim)]
    n = len(a.realization[0])
    X = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(Polynomial.linear([dual[b][i][j] for b in range(a.dim)]))
        X.append(row)
    return X


def _block(X, start, size):
    return [row[start:start + size] for row in X[start:start + size]]


def _block_generators(series, rank, Xb, tag):
    size = len(Xb)
    if series == "A":
        traces = _power_traces(Xb, rank + 1)
        return [(traces[k - 1], f"tr(x^{k}){tag}") for k in range(2, rank + 2)]
    if series in ("B", "C"):
        e = _elementary_from_traces(_power_traces(Xb, 2 * rank))
        return [(e[2 * k], f"c{2 * k}(x){tag}") for k in range(1, rank + 1)]
    # D: anti-diagonal J with J X skew
    e = _elementary_from_traces(_power_traces(Xb, 2 * rank - 2))
    out = [(e[2 * k], f"c{2 * k}(x){tag}") for k in range(1, rank)]
    JX = [Xb[size - 1 - i] for i in range(size)]
    out.append((_pfaffian(JX), f"pf(x){tag}"))
    return out


def classical_generators(a: LieAlgebra, verify: bool = True) -> InvariantSet:
    """Trace powers (A), even characteristic coefficients (B, C), plus the Pfaffian (D), per block."""
    blocks = a.metadata.get("blocks")
    if not blocks:
        raise ValueError("classical generators need an algebra built from classical blocks")
    X = coadjoint_matrix(a)
    gens = []
    for c, (series, rank, start, size) in enumerate(blocks):
        tag = f"[{c + 1}]" if len(blocks) > 1 else ""
        for poly, name in _block_generators(series, rank, _block(X, start, size), tag):
            gens.append(InvariantGenerator(poly, name))
    rank = sum(b[1] for b in blocks)
    out = InvariantSet(tuple(gens), a, rank)
    if verify:
        for g in gens:
            if not is_central(a, g.poly):
                raise AssertionError(f"{g.name} is not invariant")
    return out


def user_generators(a: LieAlgebra, docs, names=None) -> InvariantSet:
    """Generators given as lists of [exponents, scalar-text] terms; invariance is checked."""
    order = a.field()
    gens = []
    for n, doc in enumerate(docs):
        p = polynomial_from_json(doc, a.dim, order)
        if not is_central(a, p):
            raise ValueError(f"user generator {n + 1} is not invariant")
        gens.append(InvariantGenerator(p, names[n] if names else f"H{n + 1}"))
    return InvariantSet(tuple(gens), a, a.metadata.get("rank") or len(gens))


def polynomial_from_json(doc, nvars, field_order=None) -> Polynomial:
    terms = {}
    for exps, text in doc:
        if len(exps) != nvars:
            raise ValueError(f"exponent vector {exps} does not have {nvars} entries")
        c = parse_scalar(text, field_order)
        key = tuple(int(e) for e in exps)
        terms[key] = canon(terms.get(key, 0) + c)
    return Polynomial(nvars, terms)


# -- theta bookkeeping -----------------------------------------------------------

def theta_action(p: Polynomial, g: ZmGrading) -> Polynomial:
    """Induced action on S(q) in graded variables: x_b -> zeta^deg(b) x_b."""
    z = g.zeta()
    return p.scale_variables([canon(z**d) for d in g.degree])


def theta_exponent(p: Polynomial, g: ZmGrading):
    """r with theta(p) = zeta^r p, or None when p is not an eigenvector."""
    exps = {sum(e * d for e, d in zip(mono, g.degree)) % g.m for mono in p.terms}
    if len(exps) > 1:
        return None
    return exps.pop() if exps else 0


def theta_eigen_data(s: InvariantSet, g: ZmGrading) -> InvariantSet:
    gens = []
    for h in s.generators:
        r = theta_exponent(h.poly, g)
        if r is None:
            raise ValueError(f"{h.name} is not a theta-eigenvector; supply an eigen-generating set")
        gens.append(replace(h, theta_exponent=r))
    return replace(s, generators=tuple(gens))


def _coeff_matrix(polys):
    monos = sorted({m for p in polys for m in p.terms})
    return monos, [[p.terms.get(m, Fraction(0)) for m in monos] for p in polys]


def theta_eigen_generators(s: InvariantSet, g: ZmGrading) -> InvariantSet:
    """Diagonalize theta on each span of equal-degree generators, then record r_j.

    Fails if theta does not preserve such a span.
    """
    order = g.field
    z = g.zeta()
    by_degree: dict = {}
    for h in s.generators:
        by_degree.setdefault(h.degree, []).append(h)
    out = []
    for d in sorted(by_degree):
        group = by_degree[d]
        if all(theta_exponent(h.poly, g) is not None for h in group):
            out.extend(replace(h, theta_exponent=theta_exponent(h.poly, g)) for h in group)
            continue
        polys = [h.poly for h in group]
        images = [theta_action(p, g) for p in polys]
        monos, base = _coeff_matrix(polys + images)
        base_rows = base[: len(polys)]
        # columns of T: theta(H_i) = sum_k T[k][i] H_k
        cols = []
        for img in base[len(polys):]:
            sol = linalg.solve(linalg.transpose(base_rows), img)
            if sol is None:
                raise ValueError(f"theta does not preserve the span of degree-{d} generators")
            cols.append(sol)
        T = [[lift(x, order) for x in row] for row in linalg.transpose(cols)]
        found = 0
        for r in range(g.m):
            ev = canon(z**r)
            shifted = [[canon(x - ev) if i == j else x for j, x in enumerate(row)]
                       for i, row in enumerate(T)]
            for v in linalg.nullspace(shifted, len(group)):
                poly = Polynomial.zero(polys[0].nvars)
                for c, p in zip(v, polys):
                    if c:
                        poly = poly + p.scale(c)
                name = f"{group[0].name.split('[')[0]}<{r}>" + (f"#{found}" if len(group) > g.m else "")
                out.append(InvariantGenerator(poly, name, r))
                found += 1
        if found != len(group):
            raise ValueError(f"theta is not diagonalizable on degree-{d} generators")
    return InvariantSet(tuple(out), s.algebra, s.rank)


# -- phi-weights -------------------------------------------------------------------

def phi_decompose(H: Polynomial, weights) -> dict:
    """weight -> component; components sum back to H."""
    if not H.terms:
        return {0: H}
    return H.weight_components(weights)


def D_phi(weights) -> int:
    return sum(weights)


def ggs_check(polys, weights, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, box=DEFAULT_BOX) -> dict:
    """Degree-sum criterion next to sampled independence of the top components."""
    tops = [max(phi_decompose(p, weights).items()) for p in polys]
    total = sum(w for w, _ in tops)
    D = D_phi(weights)
    independent = algebraic_independence([t for _, t in tops], samples, seed, box)
    return {
        "top_weights": [w for w, _ in tops],
        "tops": [t for _, t in tops],
        "sum_top_degrees": total,
        "D": D,
        "lower_bound_holds": total >= D,
        "is_ggs": total == D,
        "independence_of_tops": independent,
        "consistent": (total == D) == independent,
    }


def zx_generators(s: InvariantSet, g: ZmGrading):
    """All nonzero bi-homogeneous components H_{j,i} as (name, weight, poly)."""
    out = []
    for h in s.generators:
        for w, comp in phi_decompose(h.poly, g.degree).items():
            if comp:
                out.append((h.name, w, comp))
    return out


def b_theta(dim_g, rank_g, dim_g0, rank_g0) -> int:
    """b(g) - b(g0) + rk g0."""
    return (dim_g + rank_g) // 2 - (dim_g0 + rank_g0) // 2 + rank_g0


def restriction_check(s: InvariantSet, g: ZmGrading):
    """Per generator: (restriction to g0 nonzero, r == 0, agree)."""
    zero = g.component(0)
    rows = []
    for h in s.generators:
        nonzero = bool(h.poly.restrict(zero))
        fixed = h.theta_exponent == 0
        rows.append({"name": h.name, "restriction_nonzero": nonzero, "fixed": fixed,
                     "agree": nonzero == fixed})
    return rows


def outer_inv_checks(s: InvariantSet, g: ZmGrading, rank_g0: int) -> dict:
    rs = [h.theta_exponent for h in s.generators]
    tops = [h.top(g.degree)[0] for h in s.generators]
    fixed = sum(1 for r in rs if r == 0)
    top_rule = [(r == 0) == (w % g.m == 0) for r, w in zip(rs, tops)]
    return {
        "r": rs,
        "sum_r": sum(rs),
        "expected_sum_r": Fraction(g.m * (s.rank - rank_g0), 2),
        "sum_rule": 2 * sum(rs) == g.m * (s.rank - rank_g0),
        "fixed_count": fixed,
        "rank_g0": rank_g0,
        "fixed_rule": fixed == rank_g0,
        "top_degrees": tops,
        "top_rule": all(top_rule),
        "offending": [h.name for h, ok in zip(s.generators, top_rule) if not ok],
    }


def classify_kind(s: InvariantSet, g: ZmGrading) -> str:
    """Automorphism kind, cross-checked against the eigen-data; disagreement is an error."""
    all_fixed = all(h.theta_exponent == 0 for h in s.generators)
    restr = all(row["agree"] for row in restriction_check(s, g))
    if not restr:
        raise ValueError("restriction table disagrees with theta eigen-data")
    kind = g.kind
    if kind is None:
        return "inner" if all_fixed else "outer"
    if (kind == "inner") != all_fixed:
        raise ValueError(f"automorphism declared {kind} but eigen-data says "
                         f"{'all fixed' if all_fixed else 'some not fixed'}")
    return kind


# -- g0 invariants -----------------------------------------------------------------

def g0_invariants(g: ZmGrading, rank_g0: int | None = None, supplied=None,
                  samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, box=DEFAULT_BOX):
    """rk g0 independent invariants of g0, as polynomials in g0's own variables.

    Candidates: centre coordinates, then traces of powers of the g0 coadjoint
    matrix.  Raises when the heuristic finds fewer than rk g0.
    """
    g0 = fixed_subalgebra(g)
    if rank_g0 is None:
        rank_g0 = index_estimate(g0, samples, seed, box).index
    if supplied is not None:
        polys = [polynomial_from_json(doc, g0.dim, g.field) for doc in supplied]
        for p in polys:
            if not is_central(g0, p):
                raise ValueError("a supplied g0 invariant is not invariant")
        if len(polys) != rank_g0 or not algebraic_independence(polys, samples, seed, box):
            raise ValueError(f"need {rank_g0} independent supplied g0 invariants")
        return g0, polys
    candidates = [Polynomial.linear(v) for v in center(g0)]
    if g0.realization is not None and g0.dim:
        gram = [[_tr_prod(x, y) for y in g0.realization] for x in g0.realization]
        if linalg.rank(gram) == g0.dim:
            inv = linalg.inverse(gram)
            dual = [mat_lin([inv[c][b] for c in range(g0.dim)], g0.realization) for b in range(g0.dim)]
            X = coadjoint_matrix(g0, dual)
            candidates += [p for p in _power_traces(X, len(X))[1:] if p]
    chosen = []
    for p in candidates:
        if len(chosen) == rank_g0:
            break
        if not is_central(g0, p):
            continue
        if max_jacobian_rank(chosen + [p], samples, seed, box) == len(chosen) + 1:
            chosen.append(p)
    if len(chosen) < rank_g0:
        raise ValueError(f"found {len(chosen)} of {rank_g0} g0 invariants; supply them in the scenario")
    return g0, chosen


def _tr_prod(x, y):
    return canon(sum((x[i][k] * y[k][i] for i in range(len(x)) for k in range(len(x))
                      if x[i][k] and y[k][i]), Fraction(0)))


def g0_to_g(g: ZmGrading, p: Polynomial) -> Polynomial:
    """View a polynomial on g0 as an element of S(g0) inside S(g)."""
    return p.embed(g.algebra.dim, g.component(0))


def zinfty_generators(s: InvariantSet, g: ZmGrading):
    """Basis of g0, plus the lowest components of non-fixed generators when theta is outer."""
    n = g.algebra.dim
    out = [(g.algebra.labels[i], Polynomial.var(n, i)) for i in g.component(0)]
    if g.kind != "inner":
        for h in s.generators:
            if h.theta_exponent:
                out.append((f"{h.name}_bottom", h.bottom(g.degree)[1]))
    return out


def zinfty_g0_generators(s: InvariantSet, g: ZmGrading, f0):
    """F_i on g0 together with the lowest components of non-fixed generators."""
    out = [(f"F{i + 1}", g0_to_g(g, p)) for i, p in enumerate(f0)]
    for h in s.generators:
        if h.theta_exponent:
            out.append((f"{h.name}_bottom", h.bottom(g.degree)[1]))
    return out


def swap_g0_components(s: InvariantSet, g: ZmGrading, f0):
    """Replace the components of Z_x lying in S(g0) by the F_i."""
    zero = set(g.component(0))
    kept, dropped = [], []
    for name, w, p in zx_generators(s, g):
        (dropped if set(p.variables()) <= zero else kept).append((name, w, p))
    swapped = [p for _, _, p in kept] + [g0_to_g(g, f) for f in f0]
    return {"dropped": len(dropped), "added": len(f0), "polys": swapped}


# -- S(g~)^{g~} ---------------------------------------------------------------------

def _tilde_images(sd: SemidirectAlgebra):
    """Images in S(g~) of the second summand (0, b) and first summand (y, 0) variables."""
    n = sd.algebra.dim
    where = {o: b for b, o in enumerate(sd.origin)}
    half = Fraction(1, 2)
    second, first = [], {}
    for i, d in enumerate(sd.grading.degree):
        if d == 0:
            dv, av = Polynomial.var(n, where[("d", i)]), Polynomial.var(n, where[("ab", i)])
            second.append(dv.scale(half) + av)
            first[i] = dv.scale(half) - av
        else:
            second.append(Polynomial.var(n, where[("g", i)]))
    return second, first


def tilde_invariants(sd: SemidirectAlgebra, s: InvariantSet, f0):
    """phi~-tops of F_i (first summand), corrected fixed H_j and non-fixed H_j (second summand)."""
    g = sd.grading
    second, first = _tilde_images(sd)
    zero = g.component(0)
    n = sd.algebra.dim
    first_list = [first[i] for i in zero]
    out = []
    for i, f in enumerate(f0):
        full = f.substitute(first_list)
        out.append({"name": f"F{i + 1}", "kind": "F", "full": full})
    for h in s.generators:
        full = h.poly.substitute(second)
        if h.theta_exponent == 0:
            rest = h.poly.restrict(zero)
            neg = rest.scale_variables([-1] * rest.nvars)
            images = [first.get(i, Polynomial.zero(n)) for i in range(h.poly.nvars)]
            full = full - neg.substitute(images)
            out.append({"name": f"{h.name}~", "kind": "fixed", "full": full, "source": h})
        else:
            out.append({"name": h.name, "kind": "moved", "full": full, "source": h})
    for entry in out:
        w, top = max(phi_decompose(entry["full"], sd.weights).items())
        entry["top_weight"], entry["top"] = w, top
    return out


# -- property suites ------------------------------------------------------------------

def tops_central_in_zero(s: InvariantSet, g: ZmGrading) -> bool:
    q0 = contract_zero(g).algebra
    return all(is_central(q0, h.top(g.degree)[1]) for h in s.generators)


def bottoms_central_in_infty(s: InvariantSet, g: ZmGrading) -> bool:
    qi = contract_infty(g).algebra
    return all(is_central(qi, h.bottom(g.degree)[1]) for h in s.generators)


def gradients_in_kernels(a: LieAlgebra, polys, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED,
                         box=DEFAULT_BOX) -> bool:
    pts = sample_points(a.dim, samples, seed, box)
    return all(gradient_in_kernel(a, p, pt) for p in polys for pt in pts)


def pencil_centre(s: InvariantSet, g: ZmGrading, s_value) -> tuple:
    """(t, generators of Z_t) for t = s^m, pulled back along phi_s: q(t) -> q.

    The pullback substitutes x_b -> s^(-deg b) x_b, so H_j becomes sum_i s^(-i) H_{j,i}.
    """
    s_value = Fraction(s_value)
    factors = [canon(1 / s_value**d) for d in g.degree]
    t = canon(s_value**g.m)
    return t, [h.poly.scale_variables(factors) for h in s.generators]


def g0_invariance(g: ZmGrading, polys) -> bool:
    zero = g.component(0)
    return all(is_central(g.algebra, p, among=zero) for p in polys)


def pairwise_commute(a: LieAlgebra, polys, mode="symbolic", **kw):
    """First non-commuting index pair, or None."""
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not commutes(a, polys[i], polys[j], mode, **kw):
                return (i, j)
    return None


def centre_of_member_ok(s: InvariantSet, g: ZmGrading, s_value) -> bool:
    t, polys = pencil_centre(s, g, s_value)
    member = pencil_member(g, t).algebra
    return all(is_central(member, p) for p in polys)
