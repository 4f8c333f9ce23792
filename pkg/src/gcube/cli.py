"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
numeric failure.  JSON output carries 17 significant digits for round-trip
safety; human output uses 10.  Identical invocations with identical seed
and tolerance produce byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass

from .asymptotics import (
    asymptotic_sweep,
    leading_coefficient_rows,
    sweep_csv,
    _solve_report,
)
from .entropy import (
    binomial_entropy,
    binomial_entropy_bounds,
    decreasing_rearrangement,
    entropy,
    pmf_signed_sum,
)
from .gowers import energy_E, energy_E_tilde, energy_P, gowers_norm_pow
from .lattice import load_function, load_set
from .solver import BracketError, SolverConfig, solve_exponent
from .terms import enumerate_tuple_classes, pmf_of_tuple
from .verify import SUITES

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-9
    seed: int = 0
    output_format: str = "human"
    cache_path: str | None = None
    threads: int = 1

    def __post_init__(self):
        if not 0 < self.tolerance <= 1e-3:
            raise ValueError("tolerance must lie in (0, 1e-3]")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.output_format not in ("human", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.threads < 1:
            raise ValueError("threads must be positive")


def _f17(x):
    return format(float(x), ".17g")


def _f10(x):
    return format(float(x), ".10g")


def dumps17(obj):
    """Deterministic JSON with floats at 17 significant digits."""
    if isinstance(obj, float):
        return _f17(obj)
    if isinstance(obj, dict):
        inner = ",".join(f"{json.dumps(str(k))}:{dumps17(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps17(v) for v in obj) + "]"
    return json.dumps(obj)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="solver tolerance")
    common.add_argument("--seed", type=int, default=0, help="rng seed")
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--cache", default=None, help="append-only JSONL result cache")
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes for sweeps")

    p = argparse.ArgumentParser(
        prog="gcube",
        description="Box norms, additive energies, and critical exponents "
                    "on discrete cubes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("norm", parents=[common], help="box norm of a function")
    s.add_argument("--f", required=True, help="function JSON file")
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("energy", parents=[common], help="exact set energies")
    s.add_argument("--set", required=True, help="set JSON file")
    s.add_argument("--kind", choices=("P", "E", "Etilde"), required=True)
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("exponent", parents=[common], help="critical exponent pair")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--json", action="store_true", dest="as_json")
    s.add_argument("--csv", action="store_true", dest="as_csv")

    s = sub.add_parser("entropy", parents=[common], help="entropy utilities")
    s.add_argument("--binomial", type=int, default=None, metavar="M")
    s.add_argument("--signed", default=None, metavar="H1,H2,...")

    s = sub.add_parser("terms", parents=[common], help="tuple classes with q vectors")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--json", action="store_true", dest="as_json")

    s = sub.add_parser("table1", parents=[common], help="leading coefficient table")
    s.add_argument("--n-max", type=int, default=6, dest="n_max")

    s = sub.add_parser("asym", parents=[common], help="large-k formula sweep")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", required=True, help="comma-separated k values")
    s.add_argument("--csv", default=None, dest="csv_path", metavar="PATH")

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", required=True)

    return p


def cmd_norm(args, cfg):
    f = load_function(args.f)
    power = gowers_norm_pow(f, args.k)
    norm = power ** (0.5 ** args.k)
    if cfg.output_format == "json":
        print(dumps17({"k": args.k, "power": power, "norm": norm}))
    else:
        print(f"norm_power = {_f10(power)}")
        print(f"norm = {_f10(norm)}")
    return EXIT_OK


_ENERGY = {"P": energy_P, "E": energy_E, "Etilde": energy_E_tilde}


def cmd_energy(args, cfg):
    A = load_set(args.set)
    value = _ENERGY[args.kind](A, args.k)
    if cfg.output_format == "json":
        print(dumps17({"kind": args.kind, "k": args.k, "size": A.size,
                       "value": value}))
    else:
        print(value)
    return EXIT_OK


def _solver_config(cfg):
    return SolverConfig(t_tolerance=cfg.tolerance, rng_seed=cfg.seed)


def _cfg_hash(scfg):
    payload = json.dumps(
        {
            "grid": scfg.inner_grid_resolution,
            "multistart": scfg.multistart_count,
            "polish": scfg.polish_iterations,
            "seed": scfg.rng_seed,
            "grid_top": scfg.grid_top,
            "symmetric": scfg.symmetric,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _cache_lookup(path, k, n, cfg_hash, tol):
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except FileNotFoundError:
        return None
    hit = None
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            entry = json.loads(line)
        except json.JSONDecodeError:
            continue
        if (
            entry.get("command") == "exponent"
            and entry.get("k") == k
            and entry.get("n") == n
            and entry.get("cfg_hash") == cfg_hash
            and entry.get("tol", float("inf")) <= tol
        ):
            hit = entry["result"]
    return hit


def _cache_append(path, k, n, cfg_hash, tol, result):
    entry = {"command": "exponent", "k": k, "n": n,
             "cfg_hash": cfg_hash, "tol": tol, "result": result}
    with open(path, "a") as fh:
        fh.write(dumps17(entry) + "\n")


def cmd_exponent(args, cfg):
    scfg = _solver_config(cfg)
    cfg_hash = _cfg_hash(scfg)
    result = None
    if cfg.cache_path:
        result = _cache_lookup(cfg.cache_path, args.k, args.n, cfg_hash,
                               cfg.tolerance)
    if result is None:
        pair = solve_exponent(args.n, args.k, scfg)
        result = {
            "k": pair.k,
            "n": pair.n,
            "t": pair.t,
            "p": pair.p,
            "residual": pair.residual,
            "bracket": pair.bracket_width,
            "argmax": list(pair.argmax),
        }
        if cfg.cache_path:
            _cache_append(cfg.cache_path, args.k, args.n, cfg_hash,
                          cfg.tolerance, result)
    fmt = cfg.output_format
    if args.as_json:
        fmt = "json"
    elif args.as_csv:
        fmt = "csv"
    if fmt == "json":
        print(dumps17(result))
    elif fmt == "csv":
        print("k,n,t,p,residual,bracket")
        print(",".join([str(result["k"]), str(result["n"])]
                       + [_f17(result[key]) for key in
                          ("t", "p", "residual", "bracket")]))
    else:
        print(f"t = {_f10(result['t'])}")
        print(f"p = {_f10(result['p'])}")
        print(f"residual = {_f10(result['residual'])}")
        print(f"bracket = {_f10(result['bracket'])}")
    return EXIT_OK


def cmd_entropy(args, cfg):
    if (args.binomial is None) == (args.signed is None):
        raise ValueError("exactly one of --binomial or --signed is required")
    if args.binomial is not None:
        m = args.binomial
        h = binomial_entropy(m)
        lo, hi = binomial_entropy_bounds(m)
        if cfg.output_format == "json":
            print(dumps17({"m": m, "entropy": h, "lower": lo, "upper": hi}))
        else:
            print(f"H_{m} = {_f10(h)}")
            print(f"lower = {_f10(lo)}")
            print(f"upper = {_f10(hi)}")
    else:
        try:
            coeffs = tuple(int(v) for v in args.signed.split(","))
        except ValueError as exc:
            raise ValueError(f"bad coefficient list {args.signed!r}") from exc
        pmf = pmf_signed_sum(coeffs)
        rearranged = decreasing_rearrangement(pmf)
        h = entropy(pmf)
        if cfg.output_format == "json":
            print(dumps17({
                "coefficients": list(coeffs),
                "offset": pmf.support_offset,
                "masses": [str(m) for m in pmf.masses],
                "rearrangement": [str(m) for m in rearranged],
                "entropy": h,
            }))
        else:
            print(f"offset = {pmf.support_offset}")
            print("masses = " + " ".join(str(m) for m in pmf.masses))
            print("rearrangement = " + " ".join(str(m) for m in rearranged))
            print(f"entropy = {_f10(h)}")
    return EXIT_OK


def cmd_terms(args, cfg):
    classes = enumerate_tuple_classes(args.n)
    payload = {
        "n": args.n,
        "classes": [
            {
                "l": c.l,
                "size": c.size,
                "tuples": [
                    {
                        "a": a,
                        "h": list(h),
                        "q": [str(q) for q in pmf_of_tuple(args.n, a, h)],
                    }
                    for a, h in c.tuples
                ],
            }
            for c in classes
        ],
    }
    if args.as_json or cfg.output_format == "json":
        print(dumps17(payload))
    else:
        for c in classes:
            print(f"l={c.l} size={c.size}")
            for a, h in c.tuples:
                q = pmf_of_tuple(args.n, a, h)
                print(f"  a={a} h={list(h)} q=({', '.join(str(v) for v in q)})")
    return EXIT_OK


def cmd_table1(args, cfg):
    rows = leading_coefficient_rows(args.n_max)
    if cfg.output_format == "json":
        print(dumps17([{"n": n, "coefficient": v} for n, v in rows]))
    elif cfg.output_format == "csv":
        print("n,coefficient")
        for n, v in rows:
            print(f"{n},{_f17(v)}")
    else:
        for n, v in rows:
            print(f"n = {n}: {_f10(v)}")
    return EXIT_OK


def cmd_asym(args, cfg):
    try:
        ks = sorted(int(v) for v in args.k.split(","))
    except ValueError as exc:
        raise ValueError(f"bad k list {args.k!r}") from exc
    scfg = _solver_config(cfg)
    if cfg.threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            reports = list(pool.map(_solve_report,
                                    [(args.n, k, scfg) for k in ks]))
    else:
        reports = asymptotic_sweep(args.n, ks, scfg)
    text = sweep_csv(reports)
    if args.csv_path:
        with open(args.csv_path, "w") as fh:
            fh.write(text)
        print(f"wrote {args.csv_path}")
    elif cfg.output_format == "json":
        print(dumps17([
            {
                "k": r.k,
                "n": r.n,
                "t_solver": r.t_solver,
                "t_formula": r.t_formula,
                "gap": r.gap,
                "lower13": r.large_n_lower,
                "upper": r.upper_trivial,
            }
            for r in reports
        ]))
    elif cfg.output_format == "csv":
        sys.stdout.write(text)
    else:
        for r in reports:
            print(
                f"k = {r.k}: t = {_f10(r.t_solver)}, formula = "
                f"{_f10(r.t_formula)}, gap = {_f10(r.gap)}"
            )
    return EXIT_OK


def cmd_verify(args, cfg):
    suite = SUITES.get(args.suite)
    if suite is None:
        print(f"unknown suite {args.suite!r}; choices: {', '.join(sorted(SUITES))}",
              file=sys.stderr)
        return EXIT_USAGE
    rep = suite()
    for failure in rep.failures:
        print(f"FAIL: {failure}")
    status = "PASS" if rep.passed else "FAIL"
    print(f"suite {args.suite}: {status} ({rep.cases} checks)")
    return EXIT_OK if rep.passed else EXIT_VERIFY_FAIL


_DISPATCH = {
    "norm": cmd_norm,
    "energy": cmd_energy,
    "exponent": cmd_exponent,
    "entropy": cmd_entropy,
    "terms": cmd_terms,
    "table1": cmd_table1,
    "asym": cmd_asym,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = RunConfig(
            tolerance=args.tol,
            seed=args.seed,
            output_format=args.format,
            cache_path=args.cache,
            threads=args.threads,
        )
        return _DISPATCH[args.command](args, cfg)
    except BracketError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ArithmeticError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
