"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Any, Sequence

from . import qseries, triangular, verify
from ._accel import default_backend, set_threads
from .enumeration import SAFETY_LIMIT, b_brute_with_witness
from .partition import (
    PartitionError,
    alpha_k,
    format_partition,
    hook_lengths,
    hook_grid_text,
    mark_set,
    parse_partition,
)
from .transforms import grow, reduce_to_triangular

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    order: int = qseries.DEFAULT_ORDER
    n_max: int = 45
    k_max: int = 6
    fmt: str = "tsv"
    threads: int | None = None
    seed: int = 0
    limit: int = SAFETY_LIMIT

    def __post_init__(self) -> None:
        if self.order < 0:
            raise UsageError(f"--order must be nonnegative, got {self.order}")
        if self.n_max > self.limit:
            raise UsageError(f"--n-max {self.n_max} exceeds the safety limit {self.limit}")
        if self.k_max < 1:
            raise UsageError("--k-max must be at least 1")


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def _emit_json(obj: Any) -> None:
    print(json.dumps(obj))


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected A..B or N") from exc
    if lo_i < 0 or hi_i < lo_i:
        raise UsageError(f"bad range {text!r}")
    return range(lo_i, hi_i + 1)


def _k(args: argparse.Namespace) -> int:
    if args.k is None:
        raise UsageError(f"{args.command} requires --k")
    if args.k < 1:
        raise UsageError("--k must be positive")
    return args.k


def cmd_hooks(args: argparse.Namespace, cfg: Config) -> int:
    lam = parse_partition(args.partition)
    k = _k(args)
    marks = sorted(mark_set(lam, k).cells)
    a = alpha_k(lam, k)
    if cfg.fmt == "json":
        _emit_json({
            "partition": list(lam.parts),
            "k": k,
            "hooks": hook_lengths(lam),
            "marked": [list(c) for c in marks],
            "alpha_k": a,
        })
        return EXIT_OK
    grid = hook_grid_text(lam, k)
    if grid:
        print(grid)
    print("marked\t" + " ".join(f"({r},{c})" for r, c in marks))
    print(f"alpha_{k}={a}")
    return EXIT_OK


def cmd_bnk(args: argparse.Namespace, cfg: Config) -> int:
    k = _k(args)
    ns = _parse_range(args.range)
    brute = args.mode in ("brute", "both")
    if brute and ns[-1] > cfg.limit:
        raise UsageError(f"brute force beyond n={cfg.limit} is refused (requested {ns[-1]})")
    rows: list[dict[str, Any]] = []
    mismatch = False
    for n in ns:
        row: dict[str, Any] = {"n": n, "k": k}
        if args.mode != "brute":
            row["b"] = triangular.b_formula(n, k)
        if brute:
            value, wit = b_brute_with_witness(n, k)
            if args.mode == "brute":
                row["b"] = value
            else:
                row["b_brute"] = value
                row["match"] = value == row["b"]
                mismatch |= not row["match"]
            row["witness"] = list(wit.parts)
        rows.append(row)
    if cfg.fmt == "json":
        _emit_json(rows)
    else:
        cols = {"formula": ["n", "k", "b"], "brute": ["n", "k", "b", "witness"],
                "both": ["n", "k", "b", "b_brute", "witness", "match"]}[args.mode]
        print("\t".join(cols))
        for row in rows:
            cells = []
            for c in cols:
                v = row[c]
                cells.append(",".join(map(str, v)) if c == "witness" else
                             ("yes" if v else "NO") if c == "match" else str(v))
            print("\t".join(cells))
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_series(args: argparse.Namespace, cfg: Config) -> int:
    name, order = args.name, cfg.order
    if name == "gauss":
        rep = qseries.gauss_report(order)
        if cfg.fmt == "json":
            _emit_json({"name": "gauss", "order": order, "pass": rep.ok,
                        "first_mismatch": rep.first_mismatch})
        else:
            print(rep)
        return EXIT_OK if rep.ok else EXIT_MISMATCH
    builder = qseries.SERIES_BUILDERS[name]
    if name in ("bn", "pak"):
        series = builder(order)
    elif name == "han-eval":
        if args.x is None:
            raise UsageError("series han-eval requires --x")
        series = builder(_k(args), args.x, order)
    else:
        series = builder(_k(args), order)
    if cfg.fmt == "json":
        out: dict[str, Any] = {"name": name, "order": order, "coefficients": list(series.coeffs)}
        if name not in ("bn", "pak"):
            out["k"] = args.k
        if name == "han-eval":
            out["x"] = args.x
        _emit_json(out)
    else:
        _emit(series.lines())
    return EXIT_OK


def _trace_output(trace, cfg: Config, substeps: bool, extra: dict[str, Any], tail: str) -> None:
    if cfg.fmt == "json":
        _emit_json({**trace.to_dict(), **extra})
    else:
        _emit(trace.to_lines(substeps))
        print(tail)


def cmd_reduce(args: argparse.Namespace, cfg: Config) -> int:
    lam = parse_partition(args.partition)
    k = _k(args)
    end, trace = reduce_to_triangular(lam, k)
    s = end.length
    t = triangular.t_weight(s, k)
    _trace_output(trace, cfg, args.substeps, {"s": s, "t": t, "result": list(end.parts)},
                  f"result\t{format_partition(end)}\ts={s}\tt(s,k)={t}")
    return EXIT_OK


def cmd_grow(args: argparse.Namespace, cfg: Config) -> int:
    lam = parse_partition(args.partition)
    k = _k(args)
    if args.steps < 0:
        raise UsageError("--steps must be nonnegative")
    end, trace = grow(lam, k, args.steps)
    a = alpha_k(end, k)
    _trace_output(trace, cfg, args.substeps, {"result": list(end.parts), "alpha_k": a},
                  f"result\t{format_partition(end)}\tweight={end.weight}\talpha_k={a}")
    return EXIT_OK


def cmd_witness(args: argparse.Namespace, cfg: Config) -> int:
    k = _k(args)
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    lam, trace = triangular.max_witness(args.n, k, trace=True)
    b = triangular.b_formula(args.n, k)
    _trace_output(trace, cfg, args.substeps,
                  {"n": args.n, "b": b, "witness": list(lam.parts)},
                  f"witness\t{format_partition(lam)}\tn={args.n}\tb={b}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    results = []
    for name, run in verify.suite(cfg.n_max, cfg.k_max, cfg.order, cfg.seed):
        t0 = time.perf_counter()
        res = run()
        dt = time.perf_counter() - t0
        results.append({"name": name, "pass": res.ok, "detail": res.detail, "seconds": round(dt, 3)})
        if cfg.fmt == "tsv":
            print(res.line())
        if not res.ok:
            break
    ok = all(r["pass"] for r in results)
    note = f"addition_cascade k=1 is excluded: {verify.KNOWN_ADDITION_K1}"
    if cfg.fmt == "json":
        _emit_json({"pass": ok, "checks": results, "note": note, "backend": default_backend()})
    else:
        print(f"# {note}")
        print("verify\t" + ("pass" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_MISMATCH


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("tsv", "json"), default=d("tsv"), help="output format")
    parser.add_argument("--order", type=int, default=d(qseries.DEFAULT_ORDER), help="series truncation order")
    parser.add_argument("--threads", type=int, default=d(None), help="worker threads for enumeration")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomized sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="khooks", description="Maximum number of k-hooks over partitions of n.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        _common(p, suppress=True)
        return p

    p = add("hooks", "hook-length grid, marked cells and alpha_k of a partition")
    p.add_argument("partition", help='comma-separated parts, "" for the empty partition')
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_hooks)

    p = add("bnk", "table of b(n,k) over a range of n")
    p.add_argument("range", help="A..B or a single n")
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=("formula", "brute", "both"), default="formula")
    p.set_defaults(func=cmd_bnk)

    p = add("series", "coefficients of a generating function")
    p.add_argument("name", choices=("bn", "bnk", "pak", "han", "han-eval", "jacobi", "gauss"))
    p.add_argument("--k", type=int)
    p.add_argument("--x", type=int)
    p.set_defaults(func=cmd_series)

    for name, help_ in (("reduce", "reduce a partition to a nearly k-triangular one"),
                        ("grow", "add cells one at a time without losing k-hooks")):
        p = add(name, help_)
        p.add_argument("partition")
        p.add_argument("--k", type=int)
        p.add_argument("--substeps", action="store_true", help="also list cell edits inside cascades")
        if name == "grow":
            p.add_argument("--steps", type=int, default=1)
        p.set_defaults(func=cmd_reduce if name == "reduce" else cmd_grow)

    p = add("witness", "a partition of n attaining b(n,k)")
    p.add_argument("n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--substeps", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = add("verify", "run the formula / brute force / series cross-checks")
    p.add_argument("--n-max", type=int, default=45)
    p.add_argument("--k-max", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(
            order=args.order,
            n_max=getattr(args, "n_max", 45),
            k_max=getattr(args, "k_max", 6),
            fmt=args.format,
            threads=args.threads,
            seed=args.seed,
        )
        set_threads(cfg.threads)
        return args.func(args, cfg)
    except (UsageError, PartitionError, ValueError) as exc:
        print(f"khooks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
