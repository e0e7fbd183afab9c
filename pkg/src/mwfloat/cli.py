"""Benchmark and verification command line tool.

Subcommands reproduce the experiment shapes of the accuracy/performance
study this library packages: real and complex matrix multiplication
sweeps, polynomial evaluation timing, the Durand-Kerner solver, and the
oracle-backed verification suites.  Benchmarks emit CSV records with a
fixed column order (see BENCH_COLUMNS); verify prints a PASS/FAIL table.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import platform
import sys
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import linalg as _la
from . import poly as _poly
from . import roots as _roots
from . import verify as _verify
from .batch import LaneBatch
from .multiword import BITS, Variant, from_basefloat, to_decimal_string
from .oracle import BigFloat, oracle_matmul, significant_digits

PRECISIONS = {"dd": 2, "td": 3, "qd": 4}

BENCH_COLUMNS = [
    "suite",
    "precision",
    "variant",
    "simd",
    "scheme",
    "threads",
    "n",
    "repeat",
    "wall_seconds",
    "digits_min",
    "digits_max",
    "hardware",
    "timestamp",
]


@dataclass
class BenchRecord:
    suite: str
    precision: str
    variant: str
    simd: str
    scheme: str
    threads: int
    n: int
    repeat: int
    wall_seconds: float
    digits_min: str
    digits_max: str
    hardware: str
    timestamp: str

    def csv_row(self) -> str:
        vals = asdict(self)
        return ",".join(str(vals[c]) for c in BENCH_COLUMNS)


def hardware_tag() -> str:
    tag = platform.processor() or platform.machine()
    try:
        with open("/proc/cpuinfo") as fh:
            for line in fh:
                if line.lower().startswith("model name"):
                    tag = line.split(":", 1)[1].strip()
                    break
    except OSError:
        pass
    return tag.replace(",", ";")


def _timestamp() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%S")


def _median_time(fn, repeats: int) -> float:
    fn()  # warm-up
    times = []
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    times.sort()
    return times[len(times) // 2]


def _emit(records, csv_path):
    lines = [",".join(BENCH_COLUMNS)] + [r.csv_row() for r in records]
    text = "\n".join(lines) + "\n"
    if csv_path:
        with open(csv_path, "w") as fh:
            fh.write(text)
        print(f"wrote {len(records)} records to {csv_path}")
    else:
        sys.stdout.write(text)


def _split_list(text, parse=str):
    return [parse(t) for t in str(text).split(",") if t]


# --------------------------------------------------------------------------
# bench-matmul / bench-cmatmul
# --------------------------------------------------------------------------


def cmd_bench_matmul(args) -> int:
    hardware = hardware_tag()
    records = []
    for n in args.sizes:
        for prec in args.precisions:
            k = PRECISIONS[prec]
            a, b = _la.gen_test_matrices(n, k)
            oracle_c = None
            if args.verify_digits and n <= 128:
                oracle_c = oracle_matmul(
                    a.to_oracle_entries(), b.to_oracle_entries(), n, n, n
                )
            for variant in args.variants:
                plan = _la.MatMulPlan(
                    scheme=args.scheme,
                    variant=variant,
                    simd=args.simd == "on",
                    threads=args.threads,
                )
                result = {}

                def job():
                    result["c"] = _la.matmul(a, b, plan)

                wall = _median_time(job, args.repeats)
                dmin = dmax = ""
                if oracle_c is not None:
                    digs = [
                        significant_digits(
                            BigFloat.from_components(result["c"].entry_components(i, j)),
                            oracle_c[i * n + j],
                            k,
                        )
                        for i in range(n)
                        for j in range(n)
                    ]
                    dmin = f"{min(digs):.2f}"
                    dmax = f"{max(digs):.2f}"
                records.append(
                    BenchRecord(
                        "matmul",
                        prec,
                        variant,
                        args.simd,
                        str(_la.Scheme.parse(args.scheme).value),
                        args.threads,
                        n,
                        args.repeats,
                        wall,
                        dmin,
                        dmax,
                        hardware,
                        _timestamp(),
                    )
                )
                print(
                    f"matmul {prec} {variant} simd={args.simd} n={n}: {wall:.4f}s"
                    + (f" digits[{dmin},{dmax}]" if dmin else ""),
                    file=sys.stderr,
                )
    _emit(records, args.csv)
    return 0


def cmd_bench_cmatmul(args) -> int:
    hardware = hardware_tag()
    records = []
    for n in args.sizes:
        for prec in args.precisions:
            k = PRECISIONS[prec]
            a, b = _la.gen_complex_test_matrices(n, args.seed, k)
            for variant in args.variants:
                plan = _la.MatMulPlan(
                    scheme=args.scheme,
                    variant=variant,
                    simd=args.simd == "on",
                    threads=args.threads,
                )
                result = {}

                def job():
                    result["c"] = _la.cmatmul(a, b, plan)

                wall = _median_time(job, args.repeats)
                # companion real product for the 3M cost ratio column
                ar, br = _la.gen_test_matrices(n, k)
                real_wall = _median_time(lambda: _la.matmul(ar, br, plan), 1)
                ratio = wall / real_wall if real_wall > 0 else math.inf
                records.append(
                    BenchRecord(
                        "cmatmul",
                        prec,
                        variant,
                        args.simd,
                        str(_la.Scheme.parse(args.scheme).value),
                        args.threads,
                        n,
                        args.repeats,
                        wall,
                        f"{ratio:.2f}",
                        "",
                        hardware,
                        _timestamp(),
                    )
                )
                print(
                    f"cmatmul {prec} {variant} n={n}: {wall:.4f}s ({ratio:.2f}x real)",
                    file=sys.stderr,
                )
    _emit(records, args.csv)
    return 0


# --------------------------------------------------------------------------
# bench-polyeval
# --------------------------------------------------------------------------


def cmd_bench_polyeval(args) -> int:
    hardware = hardware_tag()
    records = []
    rng = np.random.default_rng(args.seed)
    for deg in args.degrees:
        for prec in args.precisions:
            k = PRECISIONS[prec]
            p = _poly.random_polynomial(deg, args.seed + deg, k)
            xs = rng.uniform(-0.5, 0.5, args.points)
            points = [from_basefloat(float(x), k) for x in xs]
            lanes = LaneBatch(
                tuple(
                    np.array([pt[c] for pt in points]) for c in range(k)
                )
            )
            for variant in args.variants:
                var = Variant.parse(variant)
                for method, fn in (
                    ("horner", lambda: [_poly.horner_eval(p, x, var) for x in points]),
                    ("estrin", lambda: [_poly.estrin_eval(p, x, var) for x in points]),
                    ("estrin-simd", lambda: _poly.estrin_eval_batched(p, lanes, var)),
                ):
                    if args.arg_kind == "complex" and method == "estrin-simd":
                        continue
                    if args.arg_kind == "complex":
                        zpts = [
                            ((x[0],) + (0.0,) * (k - 1), (0.3,) + (0.0,) * (k - 1))
                            for x in points
                        ]
                        fn = (
                            lambda m=method: [
                                _poly.eval_complex(p, z, m, var) for z in zpts
                            ]
                        )
                    wall = _median_time(fn, args.repeats)
                    records.append(
                        BenchRecord(
                            f"polyeval-{args.arg_kind}",
                            prec,
                            variant,
                            "on" if method == "estrin-simd" else "off",
                            method,
                            1,
                            deg,
                            args.repeats,
                            wall,
                            "",
                            "",
                            hardware,
                            _timestamp(),
                        )
                    )
                    us = wall / args.points * 1e6
                    print(
                        f"polyeval {prec} {variant} {method} deg={deg}: {us:.2f} us/point",
                        file=sys.stderr,
                    )
    # value cross-check: horner and estrin must agree while benchmarking
    for prec in args.precisions:
        k = PRECISIONS[prec]
        p = _poly.random_polynomial(max(args.degrees), args.seed, k)
        x = from_basefloat(0.25, k)
        h = _poly.horner_eval(p, x)
        e = _poly.estrin_eval(p, x)
        drift = abs(math.fsum(a - b for a, b in zip(h, e)))
        if drift > 4 * 2.0 ** (-BITS[k] + 2):
            print(f"horner/estrin drift {drift} at {prec}", file=sys.stderr)
            return 1
    _emit(records, args.csv)
    return 0


# --------------------------------------------------------------------------
# solve-dk
# --------------------------------------------------------------------------


def cmd_solve_dk(args) -> int:
    k = PRECISIONS[args.precision]
    variant = Variant.parse(args.variant)
    if args.chebyshev:
        q = _roots.chebyshev_coeffs(args.chebyshev, k)
        label = f"chebyshev-{args.chebyshev}"
    else:
        p = _poly.read_polynomial(args.poly_file)
        if p.k != k:
            raise SystemExit(f"polynomial file is {p.k}-word, requested {args.precision}")
        q = _roots.MonicPoly.from_polynomial(p)
        label = args.poly_file
    t0 = time.perf_counter()
    try:
        state, iters = _roots.dk_solve(q, variant, tol=args.tol, max_iter=args.max_iter)
    except _roots.NoConvergence as err:
        summary = {
            "problem": label,
            "precision": args.precision,
            "variant": variant.value,
            "converged": False,
            "iterations": args.max_iter,
            "wall_seconds": time.perf_counter() - t0,
        }
        print(json.dumps(summary, indent=2))
        return 1
    wall = time.perf_counter() - t0
    residual = _roots.residual_check(q, state.roots())
    lines = []
    for zre, zim in state.roots():
        lines.append(
            f"{to_decimal_string(zre)} {to_decimal_string(zim)}"
        )
    roots_text = "\n".join(lines) + "\n"
    if args.roots_out:
        with open(args.roots_out, "w") as fh:
            fh.write(roots_text)
    else:
        sys.stdout.write(roots_text)
    summary = {
        "problem": label,
        "precision": args.precision,
        "variant": variant.value,
        "simd": args.simd,
        "converged": True,
        "iterations": iters,
        "max_residual": residual,
        "wall_seconds": wall,
        "hardware": hardware_tag(),
    }
    print(json.dumps(summary, indent=2))
    return 0


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------


def cmd_verify(args) -> int:
    names = args.suites or [n for n in _verify.SUITES if n != "perf"]
    for name in names:
        if name not in _verify.SUITES:
            raise SystemExit(f"unknown suite {name!r}; choices: {', '.join(_verify.SUITES)}")
    results = []
    for name in names:
        results.extend(_verify.run_suite(name, full=args.full))
    if args.json:
        payload = [
            {
                "name": r.name,
                "status": r.status,
                "detail": r.detail,
                "wall_seconds": r.wall_seconds,
                "metrics": r.metrics,
            }
            for r in results
        ]
        print(json.dumps(payload, indent=2))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{r.status:4s} {r.name:<{width}s} {r.detail} [{r.wall_seconds:.2f}s]")
    hard_failures = [r for r in results if not r.passed and not r.informational]
    if hard_failures:
        print(f"{len(hard_failures)} check(s) failed", file=sys.stderr)
        return 1
    return 0


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def _add_common_bench(sub, default_sizes):
    sub.add_argument("--sizes", type=lambda s: _split_list(s, int), default=default_sizes)
    sub.add_argument(
        "--precision",
        dest="precisions",
        type=lambda s: _split_list(s, str),
        default=["dd", "td", "qd"],
        help="comma list of dd,td,qd",
    )
    sub.add_argument(
        "--variant",
        dest="variants",
        type=lambda s: _split_list(s, str),
        default=["std", "bf"],
        help="comma list of std,bf",
    )
    sub.add_argument("--simd", choices=("on", "off"), default="on")
    sub.add_argument("--threads", type=int, default=1)
    sub.add_argument("--repeats", type=int, default=3)
    sub.add_argument("--csv", default=None, help="CSV output path (stdout if omitted)")
    sub.add_argument("--seed", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mwbench",
        description="multi-word arithmetic benchmarks and verification",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    m = subs.add_parser("bench-matmul", help="real matrix multiplication sweep")
    _add_common_bench(m, [32, 64, 128])
    m.add_argument("--scheme", default="strassen", choices=[s.value for s in _la.Scheme])
    m.add_argument("--verify-digits", action="store_true")
    m.set_defaults(fn=cmd_bench_matmul)

    c = subs.add_parser("bench-cmatmul", help="complex (3M) matrix multiplication sweep")
    _add_common_bench(c, [32, 64])
    c.add_argument("--scheme", default="strassen", choices=[s.value for s in _la.Scheme])
    c.set_defaults(fn=cmd_bench_cmatmul)

    p = subs.add_parser("bench-polyeval", help="polynomial evaluation timing")
    _add_common_bench(p, [])
    p.add_argument("--degrees", type=lambda s: _split_list(s, int), default=[15, 64, 255, 1023])
    p.add_argument("--arg-kind", choices=("real", "complex"), default="real")
    p.add_argument("--points", type=int, default=4096)
    p.set_defaults(fn=cmd_bench_polyeval)

    d = subs.add_parser("solve-dk", help="simultaneous polynomial root solve")
    src = d.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly-file", default=None)
    src.add_argument("--chebyshev", type=int, default=None, metavar="N")
    d.add_argument("--precision", choices=tuple(PRECISIONS), default="dd")
    d.add_argument("--variant", choices=("std", "bf"), default="std")
    d.add_argument("--simd", choices=("on", "off"), default="on")
    d.add_argument("--tol", type=float, default=None)
    d.add_argument("--max-iter", type=int, default=200)
    d.add_argument("--roots-out", default=None)
    d.set_defaults(fn=cmd_solve_dk)

    v = subs.add_parser("verify", help="oracle-backed accuracy suites")
    v.add_argument(
        "--suite",
        dest="suites",
        type=lambda s: _split_list(s, str),
        default=None,
        help=f"comma list of {', '.join(_verify.SUITES)} (default: all but perf)",
    )
    v.add_argument("--full", action="store_true", help="full acceptance-scale counts")
    v.add_argument("--json", action="store_true")
    v.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
