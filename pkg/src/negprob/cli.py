"""Command-line front end.

Subcommands: measure, negate, iterate, sweep-n2, sweep-n, check. Each is a
thin wrapper over the library; anything printed here can be reproduced
through the API. Output goes to stdout as CSV or JSON (JSON Lines for
iterate and check), UTF-8 with LF line endings, floats rendered with
their shortest round-trip representation. No environment variables are
consulted. The check command exits 0 whatever the verdicts are; a
refutation is a finding, not a failure.

Examples:

    negprob measure -p 0.4,0.3,0.2,0.1
    negprob negate -p 0.4,0.3,0.2,0.1 -k 2
    negprob iterate -p 0.6,0.3,0.1 -k 4 --format csv
    negprob sweep-n2 --steps 200 --format csv > two_outcome.csv
    negprob sweep-n --n-min 2 --n-max 100 --format csv > uniform_by_n.csv
    negprob check --seed 42 --trials 1000 --claims C1,C2,C3
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .claims import UnknownClaim, check_all, reports_to_json
from .measures import entropy, measure_all, uniform_varextropy, varentropy, varextropy
from .negation import (
    DEFAULT_MAX_STEPS,
    DEFAULT_TOLERANCE,
    NegationTrace,
    negate,
    negate_k,
    trace_negation,
)
from .simplex import (
    Distribution,
    DimensionMismatch,
    NotADistribution,
    TooFewOutcomes,
    make_distribution,
    uniform,
)

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class SweepRow:
    """One output record: the sweep parameter plus its measure columns."""

    x: float
    columns: dict[str, float]


def parse_probs(text: str) -> list[float]:
    """Accept either a comma-separated list or a JSON array of numbers."""
    text = text.strip()
    if text.startswith("["):
        try:
            vals = json.loads(text)
        except json.JSONDecodeError as exc:
            raise NotADistribution(f"could not parse {text!r} as JSON: {exc}") from None
        if not isinstance(vals, list):
            raise NotADistribution(f"expected a JSON array, got {text!r}")
        return [float(v) for v in vals]
    out = []
    for tok in text.split(","):
        try:
            out.append(float(tok))
        except ValueError:
            raise NotADistribution(f"entry {tok.strip()!r} is not a number") from None
    return out


def build_sweep_n2(steps: int = 200) -> list[SweepRow]:
    """Rows at p1 = i/steps for i = 0..steps on two outcomes, with measures
    of the distribution and of its negation. The endpoint rows rely on the
    0*ln(0) convention so the series closes at the axes.
    """
    if steps < 2:
        raise ValueError(f"steps = {steps} must be >= 2")
    rows = []
    for i in range(steps + 1):
        p1 = i / steps
        d = make_distribution([p1, 1.0 - p1])
        nd = negate(d)
        rows.append(
            SweepRow(
                x=p1,
                columns={
                    "H_P": entropy(d),
                    "H_neg": entropy(nd),
                    "VH_P": varentropy(d),
                    "VH_neg": varentropy(nd),
                    "VJ_P": varextropy(d),
                    "VJ_neg": varextropy(nd),
                },
            )
        )
    return rows


def build_sweep_n(n_min: int = 2, n_max: int = 100) -> list[SweepRow]:
    """One row per n with the uniform distribution's H, VH and the closed
    form of its VJ."""
    if not 2 <= n_min <= n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got [{n_min}, {n_max}]")
    rows = []
    for n in range(n_min, n_max + 1):
        u = uniform(n)
        rows.append(
            SweepRow(
                x=n,
                columns={
                    "H_uniform": entropy(u),
                    "VH_uniform": varentropy(u),
                    "VJ_uniform": uniform_varextropy(n),
                },
            )
        )
    return rows


def _fmt(v) -> str:
    return repr(v)


def _rescale(columns: dict[str, float], log_base: str) -> dict[str, float]:
    """Display-only nats -> bits conversion; H1 is logarithm-free and the
    second-moment measures scale by (ln 2)^2."""
    if log_base == "e":
        return columns
    out = {}
    for name, value in columns.items():
        if name.startswith("H1"):
            out[name] = value
        elif name.startswith(("VH", "VJ")):
            out[name] = value / (_LN2 * _LN2)
        elif name.startswith(("H", "J")):
            out[name] = value / _LN2
        else:
            out[name] = value
    return out


def _print_sweep(rows: list[SweepRow], x_name: str, fmt: str, log_base: str) -> None:
    converted = [_rescale(r.columns, log_base) for r in rows]
    if fmt == "json":
        objs = [{x_name: r.x, **cols} for r, cols in zip(rows, converted)]
        print(json.dumps(objs, separators=(",", ":")))
        return
    header = [x_name] + list(converted[0])
    lines = [",".join(header)]
    for r, cols in zip(rows, converted):
        lines.append(",".join([_fmt(r.x)] + [_fmt(v) for v in cols.values()]))
    print("\n".join(lines))


def _trace_lines(trace: NegationTrace, fmt: str, log_base: str) -> str:
    if fmt == "json":
        if log_base == "e":
            return trace.to_json_lines()
        lines = []
        for step in trace.steps:
            obj: dict = {"k": step.k, "p": list(step.dist.probs)}
            obj.update(_rescale(step.measures.as_dict(), log_base))
            lines.append(json.dumps(obj, separators=(",", ":")))
        summary = {"converged_at": trace.converged_at, "tolerance": trace.tolerance}
        lines.append(json.dumps(summary, separators=(",", ":")))
        return "\n".join(lines)
    n = trace.steps[0].dist.n
    names = ["H", "H1", "J", "VH", "VJ"]
    header = ["k"] + names + [f"p_{i + 1}" for i in range(n)]
    lines = [",".join(header)]
    for step in trace.steps:
        cols = _rescale(step.measures.as_dict(), log_base)
        row = [_fmt(step.k)]
        row += [_fmt(cols[name]) for name in names]
        row += [_fmt(p) for p in step.dist.probs]
        lines.append(",".join(row))
    return "\n".join(lines)


def _parse_dist(args) -> Distribution:
    return make_distribution(parse_probs(args.probs), renormalize=args.renormalize)


def cmd_measure(args) -> int:
    columns = _rescale(measure_all(_parse_dist(args)).as_dict(), args.log_base)
    if args.format == "json":
        print(json.dumps(columns, separators=(",", ":")))
    else:
        print(",".join(columns))
        print(",".join(_fmt(v) for v in columns.values()))
    return 0


def cmd_negate(args) -> int:
    d = negate_k(_parse_dist(args), args.steps)
    if args.format == "json":
        print(d.to_json())
    else:
        print(",".join(f"p_{i + 1}" for i in range(d.n)))
        print(",".join(_fmt(p) for p in d.probs))
    return 0


def cmd_iterate(args) -> int:
    trace = trace_negation(_parse_dist(args), max_steps=args.steps, tolerance=args.tol)
    print(_trace_lines(trace, args.format, args.log_base))
    return 0


def cmd_sweep_n2(args) -> int:
    _print_sweep(build_sweep_n2(args.steps), "p1", args.format, args.log_base)
    return 0


def cmd_sweep_n(args) -> int:
    _print_sweep(build_sweep_n(args.n_min, args.n_max), "n", args.format, args.log_base)
    return 0


def cmd_check(args) -> int:
    claim_ids = args.claims.split(",") if args.claims else None
    reports = check_all(
        seed=args.seed,
        trials=args.trials,
        n_range=(args.n_min, args.n_max),
        tolerance=args.tol,
        claim_ids=claim_ids,
    )
    if args.format == "json":
        print(reports_to_json(reports))
    else:
        lines = ["claim,verdict,trials,seed,tolerance,lhs,rhs,margin"]
        for r in reports:
            ce = r.counterexample
            tail = (
                [_fmt(ce.lhs), _fmt(ce.rhs), _fmt(ce.margin)] if ce else ["", "", ""]
            )
            lines.append(
                ",".join(
                    [r.claim_id, r.verdict, _fmt(r.trials_run), _fmt(r.seed),
                     _fmt(r.tolerance)] + tail
                )
            )
        print("\n".join(lines))
    return 0


def _add_dist_flags(sp) -> None:
    sp.add_argument("-p", "--probs", required=True,
                    help="distribution as a comma list or JSON array")
    sp.add_argument("--renormalize", action="store_true",
                    help="divide nonnegative entries by their sum first")


def _add_format_flag(sp) -> None:
    sp.add_argument("--format", choices=["csv", "json"], default="json")


def _add_log_base_flag(sp) -> None:
    sp.add_argument("--log-base", dest="log_base", choices=["e", "2"], default="e",
                    help="display units: nats (e) or bits (2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negprob",
        description="Negation of discrete probability distributions and its "
        "uncertainty measures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("measure", help="the five measures of one distribution")
    _add_dist_flags(sp)
    _add_format_flag(sp)
    _add_log_base_flag(sp)
    sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("negate", help="negate a distribution k times")
    _add_dist_flags(sp)
    sp.add_argument("-k", "--steps", type=int, default=1, help="number of negations")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_negate)

    sp = sub.add_parser("iterate", help="trace repeated negation with measures")
    _add_dist_flags(sp)
    sp.add_argument("-k", "--steps", type=int, default=DEFAULT_MAX_STEPS,
                    help="maximum number of negations")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                    help="sup-norm convergence tolerance to uniform")
    _add_format_flag(sp)
    _add_log_base_flag(sp)
    sp.set_defaults(func=cmd_iterate)

    sp = sub.add_parser("sweep-n2", help="two-outcome sweep of p1 from 0 to 1")
    sp.add_argument("--steps", type=int, default=200, help="grid resolution")
    _add_format_flag(sp)
    _add_log_base_flag(sp)
    sp.set_defaults(func=cmd_sweep_n2)

    sp = sub.add_parser("sweep-n", help="uniform-distribution measures by n")
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=100)
    _add_format_flag(sp)
    _add_log_base_flag(sp)
    sp.set_defaults(func=cmd_sweep_n)

    sp = sub.add_parser("check", help="verify or refute the registered claims")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--claims", help="comma-separated claim ids, e.g. C1,C5")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotADistribution, TooFewOutcomes, DimensionMismatch, UnknownClaim,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
