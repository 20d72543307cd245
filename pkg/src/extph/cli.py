"""Command-line surface: compute, oracle, gen, verify, bench, hist.

Exit codes: 0 success, 1 verification failure, 2 input/validation error.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

import numpy as np

from . import backend as _backend
from .datasets import DatasetSpec, cycle_length_histogram, gen_erdos_renyi, write_dataset
from .errors import BatchItemError, ExtphError, OracleCapExceeded
from .extended import barcode_to_json, compute_batch, compute_extended_persistence
from .graph import TieBreakPolicy, load_graph
from .oracle import oracle_barcode
from .vectorize import RationalHatParams, rational_hat_grad
from .verify import run_battery

ORACLE_N_CAP = 500


def _policy(args) -> TieBreakPolicy:
    eps = getattr(args, "epsilon", None)
    return TieBreakPolicy(epsilon=eps) if eps else TieBreakPolicy()


def _input_files(path: Path):
    if path.is_dir():
        return sorted(
            p for p in path.iterdir()
            if p.suffix == ".json" and not p.name.endswith(".barcode.json")
        )
    return [path]


def _output_path(infile: Path, outdir: Path | None):
    base = infile.stem + ".barcode.json"
    return (outdir or infile.parent) / base


def cmd_compute(args, use_oracle=False) -> int:
    if args.workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return 2
    inp = Path(args.input)
    if not inp.exists():
        print(f"error: {inp}: no such file or directory", file=sys.stderr)
        return 2
    files = _input_files(inp)
    policy = _policy(args)
    graphs = []
    for path in files:
        try:
            graphs.append(load_graph(path))
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return 2
    try:
        if use_oracle:
            barcodes = []
            for i, g in enumerate(graphs):
                try:
                    barcodes.append(oracle_barcode(g, policy))
                except ExtphError as exc:
                    raise BatchItemError(i, exc) from exc
        else:
            barcodes = compute_batch(
                graphs, policy, with_cycles=args.with_cycles, workers=args.workers
            )
    except ExtphError as exc:
        index = getattr(exc, "index", None)
        name = files[index] if index is not None else files[0] if len(files) == 1 else "?"
        print(f"error: {name}: {exc}", file=sys.stderr)
        return 2
    outdir = Path(args.out) if args.out else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    if len(files) == 1 and not args.out and not inp.is_dir():
        print(barcode_to_json(barcodes[0]))
        return 0
    for path, bc in zip(files, barcodes):
        with open(_output_path(path, outdir), "w", encoding="utf-8") as fh:
            fh.write(barcode_to_json(bc))
            fh.write("\n")
    return 0


def cmd_gen(args) -> int:
    spec = DatasetSpec(
        family=args.family,
        count=args.count,
        seed=args.seed,
        pinwheel_size_range=tuple(args.pin_sizes),
        short_range=tuple(args.short_range),
        near_range=tuple(args.near_range),
        total_length=args.total_length,
        n=args.n,
        p=args.p,
    )
    write_dataset(spec, args.out)
    print(f"wrote {spec.count} graphs to {args.out}")
    return 0


def cmd_verify(args) -> int:
    report = run_battery(
        trials=args.trials,
        graphs=tuple(args.graphs.split(",")),
        seed=args.seed,
        inject_fault=args.inject_fault,
    )
    for check in report["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        print(f"[{status}] {check['name']}: {check['details']}")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return 0 if report["passed"] else 1


def _time_once(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return (time.perf_counter() - t0) * 1000.0


def run_bench(n, p, repeats, seed, with_cycles, compare_oracle, backends):
    """Rows (n,p,seed,repeat,mode,millis); one summary row per mode."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    if compare_oracle and n > ORACLE_N_CAP:
        raise OracleCapExceeded(f"oracle comparison capped at n={ORACLE_N_CAP}")
    rows = []
    modes = [(f"fast-{name}", name) for name in backends]
    for mode, backend_name in modes:
        times = []
        for rep in range(repeats):
            g = gen_erdos_renyi(n, p, seed + rep)
            ms = _time_once(
                lambda: compute_extended_persistence(
                    g, with_cycles=with_cycles, backend=backend_name
                )
            )
            times.append(ms)
            rows.append((n, p, seed, str(rep), mode, f"{ms:.3f}"))
        rows.append((n, p, seed, "summary", mode, _mean_std(times)))
    if compare_oracle:
        times = []
        for rep in range(repeats):
            g = gen_erdos_renyi(n, p, seed + rep)
            ms = _time_once(lambda: oracle_barcode(g))
            times.append(ms)
            rows.append((n, p, seed, str(rep), "oracle", f"{ms:.3f}"))
        rows.append((n, p, seed, "summary", "oracle", _mean_std(times)))
    return rows


def _mean_std(times) -> str:
    mean = statistics.fmean(times)
    std = statistics.pstdev(times) if len(times) > 1 else 0.0
    return f"{mean:.3f}±{std:.3f}"


def cmd_bench(args) -> int:
    if args.backend == "both":
        backends = list(_backend.available_backends())
    elif args.backend == "auto":
        backends = [_backend.active_backend()]
    else:
        backends = [args.backend]
    try:
        rows = run_bench(
            args.n, args.p, args.repeats, args.seed,
            with_cycles=args.with_cycles,
            compare_oracle=args.compare_oracle,
            backends=backends,
        )
    except (OracleCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("n,p,seed,repeat,mode,millis")
    for row in rows:
        print(",".join(str(x) for x in row))
    return 0


def cmd_hist(args) -> int:
    path = Path(args.input)
    if not path.exists():
        print(f"error: {path}: no such file", file=sys.stderr)
        return 2
    g = load_graph(path)
    bc = compute_extended_persistence(g, _policy(args), with_cycles=True)
    print(json.dumps(cycle_length_histogram(g, bc)))
    return 0


def cmd_hat(args) -> int:
    with open(args.bars, "r", encoding="utf-8") as fh:
        bars = json.load(fh)["bars"]
    with open(args.params, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    params = RationalHatParams(obj["centers"], obj["radii"])
    grad = rational_hat_grad(np.asarray(bars, dtype=np.float64), params)
    print(
        json.dumps(
            {
                "vector": grad.value.tolist(),
                "d_points": grad.d_points.tolist(),
                "d_centers": grad.d_centers.tolist(),
                "d_radii": grad.d_radii.tolist(),
            }
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extph",
        description="Extended persistence barcodes and cycle representatives for graphs",
    )
    sub = parser.add_subparsers(
        dest="command",
        required=True,
        metavar="{compute,oracle,gen,verify,bench,hist}",
    )

    def add_compute_like(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("input", help="graph JSON file or directory of them")
        sp.add_argument("--out", default=None, help="output directory")
        sp.add_argument("--with-cycles", action=argparse.BooleanOptionalAction, default=True)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--epsilon", type=float, default=None)
        sp.add_argument("--format", choices=["json"], default="json")
        return sp

    add_compute_like("compute", "compute extended persistence barcodes")
    add_compute_like("oracle", "compute barcodes with the matrix-reduction oracle")

    gen = sub.add_parser("gen", help="generate a synthetic dataset")
    gen.add_argument("--family", required=True, choices=["pinwheels", "two_cycles", "erdos_renyi"])
    gen.add_argument("--count", type=int, default=100)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.add_argument("--pin-sizes", type=int, nargs=2, default=(1, 8), metavar=("LO", "HI"))
    gen.add_argument("--short-range", type=int, nargs=2, default=(3, 15), metavar=("LO", "HI"))
    gen.add_argument("--near-range", type=int, nargs=2, default=(45, 55), metavar=("LO", "HI"))
    gen.add_argument("--total-length", type=int, default=100)
    gen.add_argument("--n", type=int, default=100)
    gen.add_argument("--p", type=float, default=0.1)

    ver = sub.add_parser("verify", help="run the property battery")
    ver.add_argument("--trials", type=int, default=2000)
    ver.add_argument("--graphs", default="K4,C5")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--report", default=None, help="write the JSON report here")
    ver.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    ben = sub.add_parser("bench", help="time the fast path (CSV on stdout)")
    ben.add_argument("--n", type=int, required=True)
    ben.add_argument("--p", type=float, required=True)
    ben.add_argument("--repeats", type=int, default=5)
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--with-cycles", action=argparse.BooleanOptionalAction, default=True)
    ben.add_argument("--compare-oracle", action="store_true")
    ben.add_argument(
        "--backend", choices=["auto", "native", "python", "both"], default="auto"
    )

    his = sub.add_parser("hist", help="cycle-length histogram of one graph")
    his.add_argument("input")
    his.add_argument("--epsilon", type=float, default=None)

    hat = sub.add_parser("hat")  # hidden: rational-hat evaluation for bindings
    hat.add_argument("--bars", required=True)
    hat.add_argument("--params", required=True)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "oracle":
            return cmd_compute(args, use_oracle=True)
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "bench":
            return cmd_bench(args)
        if args.command == "hist":
            return cmd_hist(args)
        if args.command == "hat":
            return cmd_hat(args)
    except ExtphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
