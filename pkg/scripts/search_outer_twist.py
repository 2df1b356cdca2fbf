"""Search diagonal twists d for the outer sl3 automorphism x -> Ad(d)(-K x^T K^-1).

Prints every d = diag(1, i^k1, i^k2) of order 4 whose fixed algebra is
<E11 - E33, E13, E31>, then the ones whose degree-1 part is also prescribed.
"""

import argparse

from liepencil.grading import search_sl_twists
from liepencil.liealg import mat_lin, unit

K = [[0, 0, 1], [0, -1, 0], [1, 0, 0]]
G0 = [mat_lin([1, -1], [unit(3, 0, 0), unit(3, 2, 2)]), unit(3, 0, 2), unit(3, 2, 0)]
G1 = [mat_lin([-1, 1], [unit(3, 0, 1), unit(3, 1, 2)]),
      mat_lin([1, 1], [unit(3, 1, 0), unit(3, 2, 1)])]


def fmt(ks):
    return "diag(" + ", ".join("1" if k == 0 else f"z^{k}" for k in ks) + ")"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", type=int, default=4, help="roots of unity of this order")
    args = ap.parse_args()
    print("fixed algebra only:")
    for ks in search_sl_twists(3, K, G0, 4, args.field):
        print("  ", fmt(ks))
    print("fixed algebra and degree-1 part:")
    for ks in search_sl_twists(3, K, G0, 4, args.field, target_g1=G1):
        print("  ", fmt(ks))


if __name__ == "__main__":
    main()
