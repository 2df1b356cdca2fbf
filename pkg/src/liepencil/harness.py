"""Scenario files, the check catalog and deterministic reports.

A scenario is a JSON document::

    {"format": 1, "name": "...",
     "algebra": {"series": "A", "rank": 2},
     "automorphism": {"kind": "kac_inner", "labels": [1, 1, 1]},
     "seed": 42, "samples": 20, "box": 10, "mode": "symbolic",
     "checks": [{"check": "pencil_identity"}, {"check": "ind_infty_formula", "expect": 2}]}

Automorphism kinds: ``identity``, ``kac_inner`` (labels), ``outer_sl``
(``K``, optional diagonal ``d`` as scalar strings, ``field``) and
``cyclic`` (``copies`` and an ``inner`` automorphism of the algebra).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from pathlib import Path

from . import linalg
from .contraction import (add_structures, compatibility_check, contract_infty, contract_zero,
                          pencil_member, phi_transport, same_structure, semidirect_tilde,
                          tilde_consistency, tilde_trace_functional)
from .grading import (KacDiagramInner, combo_label, cyclic_permutation_automorphism,
                      eigenspace_grading, fixed_subalgebra,
                      grading_from_kac_inner, identity_automorphism, outer_sl_automorphism,
                      validate_grading)
from .invariants import (D_phi, b_theta, bottoms_central_in_infty, centre_of_member_ok,
                         classical_generators, classify_kind, swap_g0_components, g0_invariance,
                         g0_invariants, ggs_check, gradients_in_kernels, outer_inv_checks,
                         pairwise_commute, pencil_centre, restriction_check, theta_eigen_generators,
                         tilde_invariants, tops_central_in_zero, zinfty_g0_generators,
                         zinfty_generators, zx_generators)
from .liealg import build_classical, jacobi_check, lower_central_series
from .poisson import (DEFAULT_BOX, DEFAULT_SAMPLES, DEFAULT_SEED, algebraic_independence, b_value,
                      index_estimate, is_central, sample_points, stabilizer, tensor_at)
from .scalars import format_scalar, parse_scalar

FORMAT = 1
MODES = ("symbolic", "sampled", "auto")


class ScenarioError(ValueError):
    """Malformed or rejected scenario."""


# -- scenarios ---------------------------------------------------------------------

@dataclass
class Scenario:
    name: str
    algebra: dict
    automorphism: dict
    checks: list
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    box: int = DEFAULT_BOX
    mode: str = "symbolic"
    description: str = ""
    extras: dict = field(default_factory=dict)
    path: str | None = None


def bundled_scenarios():
    root = resources.files("liepencil") / "scenarios"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".scn"))


def resolve_path(path) -> Path:
    p = Path(path)
    if p.exists():
        return p
    root = resources.files("liepencil") / "scenarios"
    for cand in (p.name, p.name + ".scn"):
        q = root / cand
        if q.is_file():
            return Path(str(q))
    raise ScenarioError(f"{path}: no such scenario file (bundled: {', '.join(bundled_scenarios())})")


def load_scenario(path) -> Scenario:
    p = resolve_path(path)
    return parse_scenario(p.read_text(), str(p))


def parse_scenario(text: str, origin: str = "<scenario>") -> Scenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{origin}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ScenarioError(f"{origin}: top level must be an object")
    if doc.get("format") != FORMAT:
        raise ScenarioError(f"{origin}: unsupported format {doc.get('format')!r}; expected {FORMAT}")
    for key in ("algebra", "automorphism", "checks"):
        if key not in doc:
            raise ScenarioError(f"{origin}: missing {key!r}")
    checks = []
    for n, c in enumerate(doc["checks"]):
        if isinstance(c, str):
            c = {"check": c}
        name = c.get("check")
        if name not in CATALOG:
            raise ScenarioError(f"{origin}: check {n + 1}: unknown check {name!r}")
        checks.append(c)
    mode = doc.get("mode", "symbolic")
    if mode not in MODES:
        raise ScenarioError(f"{origin}: mode must be one of {MODES}")
    known = {"format", "name", "description", "algebra", "automorphism", "checks", "seed",
             "samples", "box", "mode"}
    sc = Scenario(
        name=doc.get("name", Path(origin).stem),
        algebra=doc["algebra"],
        automorphism=doc["automorphism"],
        checks=checks,
        seed=int(doc.get("seed", DEFAULT_SEED)),
        samples=int(doc.get("samples", DEFAULT_SAMPLES)),
        box=int(doc.get("box", DEFAULT_BOX)),
        mode=mode,
        description=doc.get("description", ""),
        extras={k: v for k, v in doc.items() if k not in known},
        path=origin,
    )
    try:
        _validate_spec(sc.algebra, sc.automorphism)
    except (ValueError, TypeError, KeyError) as exc:
        raise ScenarioError(f"{origin}: {exc}") from None
    return sc


def _validate_spec(alg, aut):
    series, rank = alg.get("series"), alg.get("rank")
    if series not in ("A", "B", "C", "D") or not isinstance(rank, int):
        raise ValueError("algebra needs a series A/B/C/D and an integer rank")
    kind = aut.get("kind")
    if kind == "kac_inner":
        KacDiagramInner(series, rank, tuple(aut["labels"]))
    elif kind == "outer_sl":
        if series != "A":
            raise ValueError("outer_sl needs series A")
        if len(aut["K"]) != rank + 1:
            raise ValueError(f"K must be {rank + 1}x{rank + 1}")
    elif kind == "cyclic":
        if int(aut.get("copies", 0)) < 1:
            raise ValueError("cyclic needs copies >= 1")
        _validate_spec(alg, aut.get("inner", {"kind": "identity"}))
    elif kind != "identity":
        raise ValueError(f"unknown automorphism kind {kind!r}")


def _scalar(x, order):
    return parse_scalar(x, order) if isinstance(x, str) else Fraction(x)


def build_grading(alg, aut):
    """Kac labels give the grading directly; everything else goes through eigenspaces."""
    if aut["kind"] == "kac_inner":
        return grading_from_kac_inner(KacDiagramInner(alg["series"], alg["rank"], tuple(aut["labels"])))
    return eigenspace_grading(*build_automorphism(alg, aut))


def build_automorphism(alg, aut):
    """(algebra, automorphism) for a scenario fragment."""
    series, rank = alg["series"], alg["rank"]
    kind = aut["kind"]
    if kind == "identity":
        a = build_classical(series, rank)
        return a, identity_automorphism(a)
    if kind == "kac_inner":
        g = grading_from_kac_inner(KacDiagramInner(series, rank, tuple(aut["labels"])))
        return g.algebra, g.automorphism
    if kind == "outer_sl":
        order = int(aut.get("field", 1))
        K = [[_scalar(x, order) for x in row] for row in aut["K"]]
        d = [_scalar(x, order) for x in aut["d"]] if aut.get("d") else None
        return outer_sl_automorphism(rank + 1, K, d)
    if kind == "cyclic":
        h, inner = build_automorphism(alg, aut.get("inner", {"kind": "identity"}))
        return cyclic_permutation_automorphism(h, int(aut["copies"]), inner)
    raise ScenarioError(f"unknown automorphism kind {kind!r}")


class Context:
    """Lazily computed objects shared by the checks of one scenario."""

    def __init__(self, sc: Scenario, seed=None, samples=None, box=None, mode=None):
        self.sc = sc
        self.seed = sc.seed if seed is None else seed
        self.samples = sc.samples if samples is None else samples
        self.box = sc.box if box is None else box
        self.mode = sc.mode if mode is None else mode
        self._reports = {}

    @property
    def rng(self):
        return {"samples": self.samples, "seed": self.seed, "box": self.box}

    @cached_property
    def grading(self):
        return build_grading(self.sc.algebra, self.sc.automorphism)

    @property
    def algebra(self):
        return self.grading.algebra

    @cached_property
    def g0(self):
        return fixed_subalgebra(self.grading)

    @cached_property
    def q_zero(self):
        return contract_zero(self.grading).algebra

    @cached_property
    def q_infty(self):
        return contract_infty(self.grading).algebra

    @cached_property
    def generators(self):
        s = theta_eigen_generators(classical_generators(self.algebra), self.grading)
        try:
            self.kind = classify_kind(s, self.grading)
        except ValueError as exc:
            raise ScenarioError(f"scenario rejected: {exc}") from None
        return s

    @cached_property
    def raw_generators(self):
        return classical_generators(self.algebra)

    def index(self, which):
        return self._indices(which).index

    def target(self, which):
        if which == "tilde":
            return self.tilde.algebra
        return {"q": self.algebra, "g0": self.g0, "q0": self.q_zero, "qinf": self.q_infty}[which]

    def _indices(self, which):
        if which not in self._reports:
            self._reports[which] = index_estimate(self.target(which), **self.rng)
        return self._reports[which]

    @property
    def rank_g(self):
        return self.generators.rank

    @property
    def rank_g0(self):
        return self.index("g0")

    @cached_property
    def f0(self):
        _, polys = g0_invariants(self.grading, self.rank_g0, self.sc.extras.get("g0_invariants"),
                                 **self.rng)
        return polys

    @cached_property
    def tilde(self):
        g = self.grading
        aut = self.sc.automorphism
        labels = None
        if aut["kind"] == "cyclic" and int(aut["copies"]) > 1:
            h = build_classical(self.sc.algebra["series"], self.sc.algebra["rank"])
            n = int(aut["copies"])
            labels = [combo_label(col[(n - 1) * h.dim:], h.labels) or g.algebra.labels[i]
                      for i, col in enumerate(g.columns)]
        return semidirect_tilde(g, labels)



# -- checks --------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    claim: str
    claimed: object
    computed: object
    passed: bool
    probabilistic: bool = False
    details: dict = field(default_factory=dict)
    runtime: float | None = None

    def to_dict(self, timing=False):
        out = {"name": self.name, "claim": self.claim, "claimed": _plain(self.claimed),
               "computed": _plain(self.computed), "passed": self.passed,
               "probabilistic": self.probabilistic, "details": _plain(self.details)}
        if timing and self.runtime is not None:
            out["runtime_s"] = round(self.runtime, 3)
        return out


def _plain(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    claim: str
    criterion: int
    fn: object


CATALOG: dict = {}


def check(name, claim, criterion):
    def deco(fn):
        CATALOG[name] = CheckSpec(name, claim, criterion, fn)
        return fn
    return deco


def list_checks():
    return [(c.name, c.criterion, c.claim) for c in CATALOG.values()]


@check("pencil_identity",
       "the two pencil brackets add up to the original bracket; both are Lie brackets; "
       "the infinity limit is nilpotent with q_0 central", 1)
def _pencil_identity(ctx, params):
    g = ctx.grading
    ok_sum = same_structure(add_structures(ctx.q_zero, ctx.q_infty), g.algebra)
    j0, ji = jacobi_check(ctx.q_zero)[0], jacobi_check(ctx.q_infty)[0]
    lcs = lower_central_series(ctx.q_infty)
    nilpotent = lcs[-1] == 0
    central = all(not ctx.q_infty.bracket_basis(i, j) for i in g.component(0) for j in range(g.algebra.dim))
    graded = validate_grading(g)[0]
    computed = {"sum_is_bracket": ok_sum, "jacobi_zero": j0, "jacobi_infty": ji,
                "lower_central_series_infty": lcs, "q0_central_in_infty": central,
                "grading_valid": graded}
    return True, all([ok_sum, j0, ji, nilpotent, central, graded]), computed, False, {}


@check("pencil_transport",
       "for t = s^m the member q(t) is carried onto q by phi_s; t = 1 and t = 0 give q and q(0)", 1)
def _pencil_transport(ctx, params):
    g = ctx.grading
    s = Fraction(params.get("s", 2))
    ok_t = same_structure(phi_transport(g.algebra, g.degree, s), pencil_member(g, s**g.m).algebra)
    ok_1 = same_structure(pencil_member(g, 1).algebra, g.algebra)
    ok_0 = same_structure(pencil_member(g, 0).algebra, ctx.q_zero)
    computed = {"transport": ok_t, "t_one": ok_1, "t_zero": ok_0}
    return True, ok_t and ok_1 and ok_0, computed, False, {"s": s}


@check("compatibility",
       "the zero and infinity brackets are compatible: every linear combination is a Lie bracket", 10)
def _compatibility(ctx, params):
    ok, reason = compatibility_check(ctx.q_zero, ctx.q_infty)
    return True, ok, ok, False, {"reason": reason}


def _regular_on_g0(ctx):
    """Some point supported on q_0 coordinates has the generic rank of q."""
    g = ctx.grading
    generic = ctx._indices("q").generic_rank_observed
    pts = sample_points(g.algebra.dim, ctx.samples, ctx.seed, ctx.box, g.component(0))
    best = max(linalg.rank(tensor_at(g.algebra, p)) for p in pts)
    return best == generic, best, generic


@check("ind_infty_formula",
       "ind q(inf) = dim q_0 + ind q - ind q_0, given a regular point of q* supported on q_0", 2)
def _ind_infty(ctx, params):
    dim0 = len(ctx.grading.component(0))
    iq, i0, iinf = ctx.index("q"), ctx.index("g0"), ctx.index("qinf")
    formula = dim0 + iq - i0
    hyp, best, generic = _regular_on_g0(ctx)
    expect = params.get("expect", formula)
    details = {"dim_q0": dim0, "ind_q": iq, "ind_q0": i0, "formula": formula,
               "hypothesis_regular_point_on_q0": hyp, "rank_on_q0_points": best,
               "generic_rank": generic, "semicontinuity": iinf >= iq,
               "witness": ctx._indices("qinf").to_dict()["witness_point"],
               "failure_bound": str(ctx._indices("qinf").failure_bound)}
    ok = hyp and iinf == formula == expect and iinf >= iq
    return expect, ok, iinf, True, details


def _gamma(ctx):
    spec = ctx.sc.extras.get("gamma")
    if not spec:
        return None
    sd = ctx.tilde
    order = ctx.grading.field
    by_weight = {}
    for term in spec["terms"]:
        w = sd.m - int(term["offset"])
        by_weight[w] = [[_scalar(x, order) for x in row] for row in term["matrix"]]
    return tilde_trace_functional(sd, by_weight, int(spec["block_size"]))


@check("eq4_tilde_index",
       "ind g~ = rk g + rk g_0, and the explicit functional gamma has a stabilizer of exactly that size", 3)
def _eq4(ctx, params):
    sd = ctx.tilde
    expected = ctx.rank_g + ctx.rank_g0
    expect = params.get("expect", expected)
    itilde = ctx.index("tilde")
    details = {"dim": sd.algebra.dim, "rk_g": ctx.rank_g, "rk_g0": ctx.rank_g0,
               "b": b_value(sd.algebra.dim, itilde), "quadratic_consistency": tilde_consistency(sd),
               "jacobi": jacobi_check(sd.algebra)[0]}
    ok = itilde == expected == expect and details["quadratic_consistency"] and details["jacobi"]
    gamma = _gamma(ctx)
    if gamma is not None:
        stab = stabilizer(sd.algebra, gamma)
        details["gamma_stabilizer_dim"] = len(stab)
        details["gamma_stabilizer_basis"] = [_vec_text(v, sd.algebra.labels) for v in stab]
        want = params.get("stabilizer_dim", expected)
        ok = ok and len(stab) == want
    return expect, ok, itilde, True, details


def _vec_text(v, labels):
    parts = []
    for c, lbl in zip(v, labels):
        if c:
            s = format_scalar(c)
            parts.append(lbl if s == "1" else f"-{lbl}" if s == "-1" else f"({s})*{lbl}")
    return " + ".join(parts)


@check("outer_inv",
       "sum_j r_j = m (rk g - rk g_0) / 2, the number of fixed generators is rk g_0, and a "
       "generator restricts nontrivially to q_0 exactly when it is fixed", 4)
def _outer_inv(ctx, params):
    s, g = ctx.generators, ctx.grading
    rep = outer_inv_checks(s, g, ctx.rank_g0)
    table = restriction_check(s, g)
    ok = rep["sum_rule"] and rep["fixed_rule"] and rep["top_rule"] and all(r["agree"] for r in table)
    expect = params.get("expect_sum_r", rep["expected_sum_r"])
    ok = ok and rep["sum_r"] == expect
    if "expect_fixed" in params:
        ok = ok and rep["fixed_count"] == params["expect_fixed"]
    rep["restriction_table"] = table
    rep["kind"] = ctx.kind
    return expect, ok, rep["sum_r"], True, rep


def _weights(ctx, which):
    if which == "tilde":
        return ctx.tilde.weights
    return ctx.grading.degree


@check("ggs_check",
       "sum of top phi-degrees is at least D_phi, with equality exactly when the tops are "
       "algebraically independent", 5)
def _ggs(ctx, params):
    which = params.get("weights", "theta")
    gens = params.get("generators", "eigen")
    if which == "tilde":
        polys = [e["full"] for e in tilde_invariants(ctx.tilde, ctx.generators, ctx.f0)]
    elif gens == "raw":
        polys = ctx.raw_generators.polys
    else:
        polys = ctx.generators.polys
    rep = ggs_check(polys, _weights(ctx, which), **ctx.rng)
    expect = params.get("expect_ggs", True)
    ok = rep["lower_bound_holds"] and rep["consistent"] and rep["is_ggs"] == expect
    if "expect_sum" in params:
        ok = ok and rep["sum_top_degrees"] == params["expect_sum"]
    details = {k: v for k, v in rep.items() if k != "tops"}
    details["weights"] = which
    return expect, ok, rep["is_ggs"], True, details


@check("degj_check",
       "the top phi~-degree of a non-fixed generator H_j is m deg H_j - r_j", 6)
def _degj(ctx, params):
    m = ctx.grading.m
    rows = []
    ok = True
    for e in tilde_invariants(ctx.tilde, ctx.generators, ctx.f0):
        if e["kind"] != "moved":
            continue
        h = e["source"]
        want = m * h.degree - h.theta_exponent
        rows.append({"name": e["name"], "top_weight": e["top_weight"], "formula": want})
        ok = ok and e["top_weight"] == want
    expect = params.get("expect", {r["name"]: r["formula"] for r in rows})
    computed = {r["name"]: r["top_weight"] for r in rows}
    ok = ok and computed == expect
    return expect, ok, computed, False, {"rows": rows}


@check("ind_zero_equals_rank", "ind q(0) = rk g", 7)
def _ind_zero(ctx, params):
    i0 = ctx.index("q0")
    expect = params.get("expect", ctx.rank_g)
    return expect, i0 == ctx.rank_g == expect, i0, True, {
        "semicontinuity": i0 >= ctx.index("q"),
        "witness": ctx._indices("q0").to_dict()["witness_point"]}


def _set(ctx, which):
    s, g = ctx.generators, ctx.grading
    if which == "zx":
        return [p for *_, p in zx_generators(s, g)]
    if which == "zinf_g0":
        return [p for _, p in zinfty_g0_generators(s, g, ctx.f0)]
    if which == "union":
        return _set(ctx, "zx") + _set(ctx, "zinf_g0")
    raise ScenarioError(f"unknown generator set {which!r}")


@check("poisson_commutativity",
       "the listed generator sets Poisson-commute pairwise for the original bracket", 8)
def _commutativity(ctx, params):
    sets = params.get("sets", ["zx"])
    computed = {}
    for which in sets:
        polys = _set(ctx, which)
        bad = pairwise_commute(ctx.algebra, polys, ctx.mode, **ctx.rng)
        computed[which] = bad is None
    return {w: True for w in sets}, all(computed.values()), computed, ctx.mode == "sampled", {}


@check("zx_count",
       "the nonzero bi-homogeneous components number b(g, theta) = b(g) - b(g_0) + rk g_0 "
       "and are algebraically independent", 9)
def _zx_count(ctx, params):
    polys = _set(ctx, "zx")
    want = b_theta(ctx.algebra.dim, ctx.rank_g, ctx.g0.dim, ctx.rank_g0)
    expect = params.get("expect", want)
    indep = algebraic_independence(polys, **ctx.rng)
    return expect, len(polys) == want == expect and indep, len(polys), True, {
        "b_theta": want, "independent": indep}


@check("zinf_count",
       "a basis of q_0 plus the lowest components of non-fixed generators are central for the "
       "infinity bracket, independent, and number ind q(inf)", 9)
def _zinf_count(ctx, params):
    gens = zinfty_generators(ctx.generators, ctx.grading)
    polys = [p for _, p in gens]
    central = all(is_central(ctx.q_infty, p) for p in polys)
    indep = algebraic_independence(polys, **ctx.rng)
    iinf = ctx.index("qinf")
    expect = params.get("expect", iinf)
    ok = central and indep and len(polys) == iinf == expect
    return expect, ok, len(polys), True, {"central": central, "independent": indep,
                                           "ind_q_infty": iinf, "names": [n for n, _ in gens]}


@check("zinf_g0_count",
       "g_0-invariants together with the lowest components of non-fixed generators number rk g "
       "and are independent", 9)
def _zinf_g0_count(ctx, params):
    gens = zinfty_g0_generators(ctx.generators, ctx.grading, ctx.f0)
    polys = [p for _, p in gens]
    indep = algebraic_independence(polys, **ctx.rng)
    central = all(is_central(ctx.q_infty, p) for p in polys)
    g0_inv = g0_invariance(ctx.grading, polys)
    expect = params.get("expect", ctx.rank_g)
    ok = indep and central and g0_inv and len(polys) == ctx.rank_g == expect
    return expect, ok, len(polys), True, {"independent": indep, "central_in_infty": central,
                                           "g0_invariant": g0_inv, "names": [n for n, _ in gens]}


@check("tilde_count",
       "tops of F_i, corrected fixed H_j and non-fixed H_j are g~-invariant, independent, "
       "number rk g + rk g_0, and their phi~-degrees sum to D_phi~", 9)
def _tilde_count(ctx, params):
    sd = ctx.tilde
    ents = tilde_invariants(sd, ctx.generators, ctx.f0)
    tops = [e["top"] for e in ents]
    central = [is_central(sd.algebra, t) for t in tops]
    indep = algebraic_independence(tops, **ctx.rng)
    want = ctx.rank_g + ctx.rank_g0
    expect = params.get("expect", want)
    total = sum(e["top_weight"] for e in ents)
    D = D_phi(sd.weights)
    ok = all(central) and indep and len(tops) == want == expect and total == D
    if "expect_sum" in params:
        ok = ok and total == params["expect_sum"]
    return expect, ok, len(tops), True, {
        "names": [e["name"] for e in ents], "top_weights": [e["top_weight"] for e in ents],
        "sum_top_weights": total, "D_tilde": D, "central": central, "independent": indep}


@check("g0_component_swap",
       "replacing the components lying in S(q_0) by g_0-invariants keeps b(g, theta) "
       "independent generators", 9)
def _g0_swap(ctx, params):
    rep = swap_g0_components(ctx.generators, ctx.grading, ctx.f0)
    want = b_theta(ctx.algebra.dim, ctx.rank_g, ctx.g0.dim, ctx.rank_g0)
    indep = algebraic_independence(rep["polys"], **ctx.rng)
    ok = len(rep["polys"]) == want and rep["dropped"] == ctx.rank_g0 and indep
    return want, ok, len(rep["polys"]), True, {"dropped": rep["dropped"], "added": rep["added"],
                                                "independent": indep}


@check("extreme_components_central",
       "top components of invariants are central for the zero bracket and bottom components "
       "for the infinity bracket", 10)
def _extremes(ctx, params):
    top = tops_central_in_zero(ctx.generators, ctx.grading)
    bottom = bottoms_central_in_infty(ctx.generators, ctx.grading)
    return True, top and bottom, top and bottom, False, {"tops": top, "bottoms": bottom}


@check("gradients_in_kernels",
       "at sampled points the differential of every invariant lies in the kernel of the "
       "Poisson tensor", 10)
def _kernels(ctx, params):
    ok = gradients_in_kernels(ctx.algebra, ctx.generators.polys, **ctx.rng)
    return True, ok, ok, False, {"points": ctx.samples}


@check("finite_centres",
       "centres of finite pencil members are generated by g_0-invariant elements", 10)
def _finite_centres(ctx, params):
    s, g = ctx.generators, ctx.grading
    comps = _set(ctx, "zx")
    comp_ok = g0_invariance(g, comps)
    s_value = Fraction(params.get("s", 2))
    member_ok = centre_of_member_ok(s, g, s_value)
    _, pulled = pencil_centre(s, g, s_value)
    pulled_ok = g0_invariance(g, pulled)
    ok = comp_ok and member_ok and pulled_ok
    return True, ok, ok, False, {"components_g0_invariant": comp_ok,
                                  "pulled_back_central": member_ok,
                                  "pulled_back_g0_invariant": pulled_ok, "s": s_value}


# -- running ------------------------------------------------------------------------

@dataclass
class Report:
    scenario: str
    seed: int
    samples: int
    box: int
    mode: str
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self, timing=False):
        return {"format": FORMAT, "scenario": self.scenario, "seed": self.seed,
                "samples": self.samples, "box": self.box, "mode": self.mode,
                "passed": self.passed, "checks": [r.to_dict(timing) for r in self.results]}

    def to_json(self, timing=False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False)

    def to_text(self, timing=False) -> str:
        lines = [f"scenario {self.scenario} (seed {self.seed}, samples {self.samples}, "
                 f"box {self.box}, mode {self.mode})"]
        for r in self.results:
            tag = "PASS" if r.passed else "FAIL"
            prob = " [probabilistic]" if r.probabilistic else ""
            t = f" ({r.runtime:.2f}s)" if timing and r.runtime is not None else ""
            lines.append(f"{tag} {r.name}{prob}: claimed {json.dumps(_plain(r.claimed))}, "
                         f"computed {json.dumps(_plain(r.computed))}{t}")
        lines.append("ALL PASS" if self.passed else "SOME CHECKS FAILED")
        return "\n".join(lines)


def run_scenario(sc, seed=None, samples=None, box=None, mode=None) -> Report:
    if not isinstance(sc, Scenario):
        sc = load_scenario(sc)
    if mode is not None and mode not in MODES:
        raise ScenarioError(f"mode must be one of {MODES}")
    ctx = Context(sc, seed, samples, box, mode)
    results = []
    for c in sc.checks:
        spec = CATALOG[c["check"]]
        params = {k: v for k, v in c.items() if k != "check"}
        start = time.perf_counter()
        claimed, ok, computed, prob, details = spec.fn(ctx, params)
        results.append(CheckResult(spec.name, spec.claim, claimed, computed, bool(ok), prob,
                                   details, time.perf_counter() - start))
    return Report(sc.name, ctx.seed, ctx.samples, ctx.box, ctx.mode, results)


def context_for(path, **kw) -> Context:
    return Context(load_scenario(path), **kw)


