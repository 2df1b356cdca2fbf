"""Run every bundled scenario and print the reports; exit 1 if any check fails."""

import argparse
import sys

from liepencil.harness import bundled_scenarios, run_scenario


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--timing", action="store_true")
    args = ap.parse_args()
    ok = True
    for name in bundled_scenarios():
        report = run_scenario(name, seed=args.seed)
        print(report.to_text(args.timing), end="\n\n")
        ok &= report.passed
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
