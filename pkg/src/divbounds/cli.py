"""Command-line front end.

Usage:
    divbounds compute --p p.txt --q q.json --measure kl,delta,phi:2
    divbounds bounds --p p.txt --q q.txt --generator phi:1
    divbounds verify --suite grand-chain --trials 10000 --seed 42
    divbounds means 1 4

Exit codes: 0 success, 1 input or argument error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any

from . import verify
from .csiszar import MEASURE_NAMES, divergence_bounds, get_measure
from .generators import get_generator
from .means import MEAN_ORDER, binary_mean, mean_chain, power_mean
from .prob import check_same_size, load_distribution

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2
SIG_DIGITS = 12
POWER_ORDERS = (-math.inf, -1.0, 0.0, 0.5, 1.0, math.inf)


class UsageError(Exception):
    pass


def _round(v: Any) -> Any:
    if isinstance(v, float) and math.isfinite(v):
        return float(f"{v:.{SIG_DIGITS}g}")
    return v


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        return cls(d["command"], dict(d["inputs"]), dict(d["results"]), dict(d["flags"]))

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "inputs": self.inputs,
            "results": {k: _round(v) for k, v in self.results.items()},
            "flags": self.flags,
        }
        return json.dumps(body)

    def to_table(self) -> str:
        lines = [self.command]
        lines += [f"  {k}: {v}" for k, v in self.inputs.items()]
        rows = [(k, f"{v:.{SIG_DIGITS}g}" if isinstance(v, float) else str(v)) for k, v in self.results.items()]
        rows += [(k, "pass" if v else "FAIL") for k, v in self.flags.items()]
        width = max((len(k) for k, _ in rows), default=0)
        lines += [f"{k.ljust(width)}  {v}" for k, v in rows]
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_table()


def _load_pair(args):
    P = load_distribution(args.p, normalize=args.normalize)
    Q = load_distribution(args.q, normalize=args.normalize)
    check_same_size(P, Q)
    return P, Q


def cmd_compute(args) -> tuple[OutputRecord, int]:
    names = [m.strip() for chunk in args.measure for m in chunk.split(",") if m.strip()]
    if not names:
        raise UsageError(f"no measure given; available: {', '.join(MEASURE_NAMES)}")
    measures = [(n, get_measure(n)) for n in names]
    P, Q = _load_pair(args)
    rec = OutputRecord("compute", {"p": str(args.p), "q": str(args.q), "n": P.n, "normalize": args.normalize})
    for name, fn in measures:
        rec.results[name] = fn(P, Q)
    return rec, EXIT_OK


def cmd_bounds(args) -> tuple[OutputRecord, int]:
    g = get_generator(args.generator)
    if not g.normalized:
        raise UsageError(f"generator {g.name} is not normalized (f(1) != 0)")
    P, Q = _load_pair(args)
    b = divergence_bounds(g, P, Q)
    rec = OutputRecord("bounds", {"p": str(args.p), "q": str(args.q), "generator": g.name, "n": P.n})
    rec.results.update({"c": b.c, "e": b.e, "a": b.a, "b": b.b, "r": b.r, "R": b.R})
    rec.flags.update({"0<=C<=E<=A": b.chain20_ok, "0<=C<=B<=A": b.chain21_ok})
    return rec, EXIT_OK


def cmd_verify(args) -> tuple[OutputRecord, int]:
    reports = verify.run_suite(
        args.suite, args.trials, args.seed, (args.n_min, args.n_max), corrupt=args.negative_control
    )
    rec = OutputRecord("verify", {
        "suite": args.suite, "trials": args.trials, "seed": args.seed,
        "n_min": args.n_min, "n_max": args.n_max, "negative_control": args.negative_control,
    })
    for rep in reports:
        rec.results[f"{rep.suite_name}.trials"] = rep.trials
        rec.results[f"{rep.suite_name}.failures"] = len(rep.failures)
        for k, v in rep.observed.items():
            rec.results[f"{rep.suite_name}.{k}"] = v
        for k, v in rep.min_slack.items():
            rec.results[f"{rep.suite_name}.min_slack[{k}]"] = v
        rec.flags[rep.suite_name] = rep.passed
    for rep in reports:
        for f in rep.failures[:5]:
            kind = "unproven claim" if f.claim else "violation"
            print(f"{rep.suite_name}: {kind} in trial {f.trial} (seed {f.seed}): {f.link}: lhs={f.lhs!r} rhs={f.rhs!r}",
                  file=sys.stderr)
    return rec, EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_means(args) -> tuple[OutputRecord, int]:
    a, b = args.a, args.b
    if not (a > 0 and b > 0):
        raise UsageError(f"means need a, b > 0; got a={a}, b={b}")
    rec = OutputRecord("means", {"a": a, "b": b})
    for k in MEAN_ORDER:
        rec.results[k.value] = binary_mean(k, a, b)
    for t in POWER_ORDERS:
        rec.results[f"D_{t:g}"] = power_mean(t, a, b)
    rec.flags["H<=G<=N1<=N2<=A"] = mean_chain(a, b).ordered
    return rec, EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="divbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_format(p):
        p.add_argument("--format", choices=("table", "json"), default="table")
        return p

    def with_pair(p):
        p.add_argument("--p", required=True, help="distribution P (one weight per line or JSON array)")
        p.add_argument("--q", required=True, help="distribution Q")
        p.add_argument("--normalize", action="store_true", help="rescale weights to sum to 1")
        return p

    p = with_format(with_pair(sub.add_parser("compute", help="evaluate divergence measures")))
    p.add_argument("--measure", action="append", required=True, help="comma-separated measure names")
    p.set_defaults(func=cmd_compute)

    p = with_format(with_pair(sub.add_parser("bounds", help="f-divergence with its upper bounds")))
    p.add_argument("--generator", required=True, help="fs:<s>, phi:<s>, ah, ag, n2n1, n2g, an2")
    p.set_defaults(func=cmd_bounds)

    p = with_format(sub.add_parser("verify", help="run verification suites"))
    p.add_argument("--suite", required=True, choices=verify.SUITE_NAMES)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--negative-control", action="store_true", help="run with each suite's corrupted constant")
    p.set_defaults(func=cmd_verify)

    p = with_format(sub.add_parser("means", help="binary means and power means of two numbers"))
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.set_defaults(func=cmd_means)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        record, code = args.func(args)
    except (UsageError, ValueError, OSError) as e:
        print(f"divbounds: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(record.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
