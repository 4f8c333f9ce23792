#!/usr/bin/env python3
"""Track how the solved exponent approaches its large-k main term.

Solves t for a fixed side n over a list of k values and prints the gap to
((n-1) log2(2k) - log2((n-1)!)) / H_{n-1}, which should shrink as k grows.

Example:
    python3 scripts/large_k_trend.py --n 3 --k 2,3,4,6,8,12,16
"""

import argparse

from gcube.asymptotics import large_k_main_term
from gcube.solver import SolverConfig, solve_exponent


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--k", default="2,3,4,6,8,12,16")
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()

    cfg = SolverConfig(t_tolerance=args.tol)
    print(f"{'k':>4} {'t_solver':>14} {'main_term':>14} {'gap':>12}")
    prev_gap = None
    for k in sorted(int(v) for v in args.k.split(",")):
        pair = solve_exponent(args.n, k, cfg)
        main_term = large_k_main_term(k, args.n)
        gap = pair.t - main_term
        trend = ""
        if prev_gap is not None and abs(gap) > abs(prev_gap) + 1e-6:
            trend = "  <- not shrinking"
        print(f"{k:>4} {pair.t:>14.8f} {main_term:>14.8f} {gap:>12.8f}{trend}")
        prev_gap = gap


if __name__ == "__main__":
    main()
