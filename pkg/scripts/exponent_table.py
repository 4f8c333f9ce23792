#!/usr/bin/env python3
"""Solve the critical exponent over a grid of (k, n) pairs and print a table.

Example:
    python3 scripts/exponent_table.py --n 2,3,4 --k 2,3,4 --tol 1e-9
"""

import argparse
import time

from gcube.solver import SolverConfig, solve_exponent, trivial_bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="2,3", help="comma-separated side lengths")
    ap.add_argument("--k", default="2,3,4", help="comma-separated box orders")
    ap.add_argument("--tol", type=float, default=1e-9)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    cfg = SolverConfig(t_tolerance=args.tol, rng_seed=args.seed)
    ns = sorted(int(v) for v in args.n.split(","))
    ks = sorted(int(v) for v in args.k.split(","))

    print(f"{'n':>3} {'k':>3} {'t':>16} {'p':>16} {'lower':>12} {'upper':>7} {'sec':>6}")
    for n in ns:
        for k in ks:
            t0 = time.time()
            pair = solve_exponent(n, k, cfg)
            lo, hi = trivial_bounds(n, k)
            print(
                f"{n:>3} {k:>3} {pair.t:>16.10f} {pair.p:>16.10f} "
                f"{lo:>12.6f} {hi:>7.2f} {time.time() - t0:>6.2f}"
            )


if __name__ == "__main__":
    main()
