"""Tabulate ind q, ind q_0, ind q(0), ind q(inf) and ind g~ for Kac-label gradings.

Each row also prints the values predicted by the index formulas so that
disagreements stand out.
"""

import argparse
from dataclasses import dataclass, field

from liepencil.contraction import contract_infty, contract_zero, semidirect_tilde
from liepencil.grading import KacDiagramInner, fixed_subalgebra, grading_from_kac_inner
from liepencil.poisson import index_estimate


@dataclass
class SurveyConfig:
    cases: list = field(default_factory=lambda: [
        ("A", 1, (1, 1)), ("A", 2, (1, 1, 0)), ("A", 2, (1, 1, 1)),
        ("A", 3, (1, 0, 1, 0)), ("A", 3, (1, 1, 1, 1)), ("B", 2, (1, 0, 1)),
        ("C", 2, (1, 1, 0)), ("C", 2, (1, 0, 1)),
    ])
    samples: int = 20
    seed: int = 42
    box: int = 10


def survey(cfg: SurveyConfig):
    rng = {"samples": cfg.samples, "seed": cfg.seed, "box": cfg.box}
    for series, rank, labels in cfg.cases:
        g = grading_from_kac_inner(KacDiagramInner(series, rank, labels))
        g0 = fixed_subalgebra(g)
        ind = {k: index_estimate(a, **rng).index for k, a in (
            ("q", g.algebra), ("g0", g0), ("q0", contract_zero(g).algebra),
            ("qinf", contract_infty(g).algebra), ("tilde", semidirect_tilde(g).algebra))}
        yield {"type": f"{series}{rank}", "labels": labels, "m": g.m, "dims": g.component_dims,
               **ind, "qinf_formula": g0.dim + ind["q"] - ind["g0"],
               "tilde_formula": ind["q"] + ind["g0"]}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    cols = ("type", "labels", "m", "dims", "q", "g0", "q0", "qinf", "qinf_formula", "tilde",
            "tilde_formula")
    print("\t".join(cols))
    for row in survey(SurveyConfig(seed=args.seed)):
        print("\t".join(str(row[c]) for c in cols))


if __name__ == "__main__":
    main()
