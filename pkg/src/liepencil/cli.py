"""Command line entry point: ``liepencil <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .contraction import INF, pencil_member
from .harness import (MODES, ScenarioError, bundled_scenarios, context_for, list_checks,
                      run_scenario, _plain)
from .invariants import (classical_generators, ggs_check, phi_decompose, theta_eigen_generators,
                         tilde_invariants, user_generators, zinfty_g0_generators, zinfty_generators,
                         zx_generators)
from .poisson import DEFAULT_BOX, DEFAULT_SAMPLES, DEFAULT_SEED, index_estimate


def _sampling(p):
    p.add_argument("--seed", type=int, default=None, help=f"RNG seed (scenario value, else {DEFAULT_SEED})")
    p.add_argument("--samples", type=int, default=None, help=f"sample points (else {DEFAULT_SAMPLES})")
    p.add_argument("--box", type=int, default=None, help=f"coordinates drawn from [-box, box] (else {DEFAULT_BOX})")


def _ctx(args):
    return context_for(args.scenario, seed=getattr(args, "seed", None),
                       samples=getattr(args, "samples", None), box=getattr(args, "box", None),
                       mode=getattr(args, "mode", None))


def _emit(obj):
    print(json.dumps(_plain(obj), indent=2))


def _poly_doc(p, labels):
    return {"degree": p.degree(), "text": p.to_text(labels), "terms": p.to_json()}


def cmd_run(args):
    report = run_scenario(args.scenario, args.seed, args.samples, args.box, args.mode)
    print(report.to_text(args.timing))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json(args.timing) + "\n")
    return 0 if report.passed else 1


def cmd_list_checks(args):
    for name, criterion, claim in list_checks():
        print(f"{name:28s} [{criterion:2d}] {claim}")
    print()
    print("bundled scenarios: " + ", ".join(bundled_scenarios()))
    return 0


def cmd_contract(args):
    ctx = _ctx(args)
    at = args.at
    if at == "0":
        t = Fraction(0)
    elif at == "inf":
        t = INF
    elif at.startswith("t="):
        t = Fraction(at[2:])
    else:
        raise ScenarioError("--at must be 0, inf or t=<rational>")
    print(pencil_member(ctx.grading, t).algebra.to_json())
    return 0


def cmd_index(args):
    ctx = _ctx(args)
    rep = index_estimate(ctx.target(args.target), **ctx.rng)
    out = rep.to_dict()
    out["target"] = args.target
    _emit(out)
    return 0


def cmd_invariants(args):
    ctx = _ctx(args)
    if args.set == "file":
        if not args.file:
            raise ScenarioError("--set file needs --file")
        with open(args.file) as fh:
            docs = json.load(fh)
        s = user_generators(ctx.algebra, docs)
    else:
        s = classical_generators(ctx.algebra)
    s = theta_eigen_generators(s, ctx.grading)
    labels = ctx.algebra.labels
    _emit({"rank": s.rank, "degrees": s.degrees,
           "generators": [dict(name=h.name, theta_exponent=h.theta_exponent,
                               **_poly_doc(h.poly, labels)) for h in s.generators]})
    return 0


def cmd_decompose(args):
    ctx = _ctx(args)
    if args.weights == "tilde":
        labels = ctx.tilde.algebra.labels
        weights = ctx.tilde.weights
        items = [(e["name"], e["full"]) for e in tilde_invariants(ctx.tilde, ctx.generators, ctx.f0)]
    else:
        labels = ctx.algebra.labels
        weights = ctx.grading.degree
        items = [(h.name, h.poly) for h in ctx.generators.generators]
    out = []
    for name, poly in items:
        comps = phi_decompose(poly, weights)
        out.append({"name": name, "components": {str(w): p.to_text(labels) for w, p in comps.items()}})
    _emit({"weights": list(weights), "D": sum(weights), "generators": out})
    return 0


def cmd_ggs(args):
    ctx = _ctx(args)
    if args.weights == "tilde":
        polys = [e["full"] for e in tilde_invariants(ctx.tilde, ctx.generators, ctx.f0)]
        weights = ctx.tilde.weights
    else:
        polys, weights = ctx.generators.polys, ctx.grading.degree
    rep = ggs_check(polys, weights, **ctx.rng)
    rep.pop("tops")
    _emit(rep)
    return 0


def cmd_z(args):
    ctx = _ctx(args)
    labels = ctx.algebra.labels
    if args.which == "zx":
        items = [(f"{n}@{w}", p) for n, w, p in zx_generators(ctx.generators, ctx.grading)]
    elif args.which == "zinf":
        items = zinfty_generators(ctx.generators, ctx.grading)
    elif args.which == "zinf-g0":
        items = zinfty_g0_generators(ctx.generators, ctx.grading, ctx.f0)
    else:
        labels = ctx.tilde.algebra.labels
        items = [(e["name"], e["top"]) for e in tilde_invariants(ctx.tilde, ctx.generators, ctx.f0)]
    _emit({"which": args.which, "count": len(items),
           "generators": [dict(name=n, **_poly_doc(p, labels)) for n, p in items]})
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="liepencil", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run every check of a scenario")
    p.add_argument("scenario")
    _sampling(p)
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--json", metavar="OUT", help="also write the report as JSON")
    p.add_argument("--timing", action="store_true", help="include per-check runtimes")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("list-checks", help="print the check catalog")
    p.set_defaults(func=cmd_list_checks)

    p = sub.add_parser("contract", help="serialize a pencil member")
    p.add_argument("scenario")
    p.add_argument("--at", required=True, help="0, inf or t=<rational>")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("index", help="sampled index with witness point")
    p.add_argument("scenario")
    p.add_argument("--target", choices=("q", "g0", "q0", "qinf", "tilde"), default="q")
    _sampling(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("invariants", help="generators with theta-exponents")
    p.add_argument("scenario")
    p.add_argument("--set", choices=("classical", "file"), default="classical")
    p.add_argument("--file", help="JSON list of generators as [[exponents], scalar] term lists")
    _sampling(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decompose", help="phi-weight components of the generators")
    p.add_argument("scenario")
    p.add_argument("--weights", choices=("theta", "tilde"), default="theta")
    _sampling(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("ggs-check", help="degree sum against D_phi and top independence")
    p.add_argument("scenario")
    p.add_argument("--weights", choices=("theta", "tilde"), default="theta")
    _sampling(p)
    p.set_defaults(func=cmd_ggs)

    p = sub.add_parser("z-generators", help="generator sets of the pencil centres")
    p.add_argument("scenario")
    p.add_argument("--which", choices=("zx", "zinf", "zinf-g0", "tilde"), default="zx")
    _sampling(p)
    p.set_defaults(func=cmd_z)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ScenarioError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
