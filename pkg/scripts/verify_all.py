#!/usr/bin/env python3
"""Run every verification suite at its default scale and print a summary table.

Usage: python scripts/verify_all.py [--seed N] [--fast]
"""

import argparse
import sys

from wyinfo.suites import SUITES, default_config, run_suite

FAST_TRIALS = {"monotonicity": 50, "distance-bound": 500, "geodesic-length": 4,
               "hessian": 10, "pullback": 20, "dual-pairs": 50}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--fast", action="store_true",
                        help="reduced trial counts for a quick sanity pass")
    args = parser.parse_args()

    print(f"{'suite':<18} {'status':<6} {'time':>8}  worst check")
    print("-" * 72)
    all_ok = True
    for name in SUITES:
        trials = FAST_TRIALS.get(name) if args.fast else None
        report = run_suite(default_config(name, seed=args.seed, trials=trials))
        all_ok &= report.passed
        worst = max(report.checks,
                    key=lambda c: abs(c.actual - c.expected) / (abs(c.tolerance) + 1e-300))
        status = "ok" if report.passed else "FAIL"
        print(f"{name:<18} {status:<6} {report.wall_time:>7.2f}s  "
              f"{worst.name}: actual={worst.actual:.3e} tol={worst.tolerance:.1e}")
    print("-" * 72)
    print("all suites passed" if all_ok else "FAILURES above")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
