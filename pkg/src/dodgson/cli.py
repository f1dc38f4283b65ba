"""Command-line front end: ``dodgson {det,macmahon,verify,bench}``.

Exit codes: 0 success, 1 counterexample or strategy disagreement,
2 usage/parse/domain error, 3 zero interior pivot under the strict strategy.
"""

import argparse
import json
import sys

from .arith import DomainError, render_rational
from .bench import BenchConfig, ConfigError, run_bench
from .condense import Strategy, ZeroInteriorPivot, det
from .macmahon import (
    MacMahonParams,
    binomial_matrix,
    macmahon_closed_form,
    verify_bhp,
    verify_identity,
    verify_recurrence,
)
from .matrix import FormatError, parse_matrix
from .report import RunRecord, digest

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_SINGULAR = 3

STRATEGIES = [s.value for s in Strategy]


class UsageError(Exception):
    pass


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _strategy_list(text):
    items = [x.strip() for x in text.split(",") if x.strip()]
    for item in items:
        if item not in STRATEGIES:
            raise argparse.ArgumentTypeError(f"unknown strategy {item!r}; choose from {', '.join(STRATEGIES)}")
    return items


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "structured"], default="table",
                        help="human-readable table or a JSON run document")
    common.add_argument("--out", help="also write the JSON run document to this path")
    common.add_argument("--threads", type=_positive_int, default=1,
                        help="workers for condensation layers (output is identical for any value)")

    parser = argparse.ArgumentParser(prog="dodgson", description="Exact determinants by Dodgson condensation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", parents=[common], help="determinant of a matrix file or stdin")
    p.add_argument("input", nargs="?", default="-", help="matrix file (default: stdin)")
    p.add_argument("--strategy", choices=STRATEGIES, default="condensation-fallback")

    p = sub.add_parser("macmahon", parents=[common], help="closed form vs determinant for one (n, a, b)")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--strategy", choices=STRATEGIES, default="condensation-fallback")

    p = sub.add_parser("verify", parents=[common], help="check the identity or recurrence on a grid")
    p.add_argument("kind", choices=["identity", "recurrence-L", "recurrence-R", "bhp"])
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--a-max", type=int)
    p.add_argument("--b-max", type=int)

    p = sub.add_parser("bench", parents=[common], help="time strategies on seeded random matrices")
    p.add_argument("--sizes", type=_int_list, default=[20, 40, 80])
    p.add_argument("--entry-min", type=int, default=-9)
    p.add_argument("--entry-max", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategies", type=_strategy_list, default=["condensation-fallback", "bareiss"])
    p.add_argument("--repetitions", type=int, default=3)
    return parser


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _det_table(res):
    events = ", ".join(f"r={e['layer']} at {tuple(e['position'])}" for e in res["fallback_events"]) or "none"
    return (
        f"value: {res['value']}\n"
        f"algorithm: {res['algorithm']}\n"
        f"fallback_events: {events}\n"
        f"elapsed_seconds: {res['elapsed_seconds']:.6f}\n"
    )


def cmd_det(args):
    text = _read_input(args.input)
    try:
        M = parse_matrix(text)
    except FormatError as exc:
        raise UsageError(f"matrix format error: {exc}") from None
    try:
        result = det(M, Strategy(args.strategy), args.threads)
    except ZeroInteriorPivot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR, None, ""
    res = {"n": M.n, "strategy": args.strategy, **result.to_dict()}
    return EXIT_OK, RunRecord("det", [], digest(text), res), _det_table(res)


def cmd_macmahon(args):
    try:
        p = MacMahonParams(args.n, args.a, args.b)
    except DomainError as exc:
        raise UsageError(f"domain error: {exc}") from None
    closed = macmahon_closed_form(p)
    try:
        result = det(binomial_matrix(p), Strategy(args.strategy), args.threads)
    except ZeroInteriorPivot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR, None, ""
    equal = closed == result.value
    res = {
        "params": {"n": p.n, "a": p.a, "b": p.b},
        "closed_form": render_rational(closed),
        "determinant": render_rational(result.value),
        "algorithm": result.algorithm.value,
        "equal": equal,
    }
    table = (
        f"n={p.n} a={p.a} b={p.b}\n"
        f"closed_form: {res['closed_form']}\n"
        f"determinant: {res['determinant']} ({res['algorithm']})\n"
        f"verdict: {'equal' if equal else 'UNEQUAL'}\n"
    )
    code = EXIT_OK if equal else EXIT_COUNTEREXAMPLE
    return code, RunRecord("macmahon", [], digest(json.dumps(res["params"], sort_keys=True)), res), table


def _verify_table(res):
    grid = ", ".join(f"{k} in [{lo}, {hi}]" for k, (lo, hi) in res["grid"].items())
    lines = [
        f"kind: {res['kind']}",
        f"grid: {grid}",
        f"cases_checked: {res['cases_checked']} / {res['grid_size']}",
    ]
    ce = res["counterexample"]
    if ce is None:
        lines.append("result: ok")
    else:
        prm = ce["params"]
        lines.append(f"result: COUNTEREXAMPLE at n={prm['n']} a={prm['a']} b={prm['b']}")
        lines.append(f"  lhs: {ce['lhs']}")
        lines.append(f"  rhs: {ce['rhs']}")
    lines.append(f"elapsed_seconds: {res['elapsed_seconds']:.6f}")
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    bounds = {"n_max": args.n_max, "a_max": args.a_max, "b_max": args.b_max}
    try:
        if args.kind == "bhp":
            report = verify_bhp(args.n_max)
        else:
            if args.a_max is None:
                raise UsageError(f"verify {args.kind} requires --a-max")
            if args.kind == "identity":
                report = verify_identity(args.n_max, args.a_max, args.b_max)
            else:
                report = verify_recurrence(args.n_max, args.a_max, args.kind[-1], args.b_max)
    except DomainError as exc:
        raise UsageError(f"domain error: {exc}") from None
    res = report.to_dict()
    key = json.dumps({"kind": args.kind, **bounds}, sort_keys=True)
    code = EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE
    return code, RunRecord("verify", [], digest(key), res), _verify_table(res)


def _bench_table(res):
    lines = [f"{'size':>6}  {'strategy':<22}  {'median_s':>10}  {'fallbacks':>9}"]
    for row in res["rows"]:
        lines.append(
            f"{row['size']:>6}  {row['strategy']:<22}  {row['median_seconds']:>10.4f}  {row['fallback_count']:>9}"
        )
    lines.append("all strategies agree" if res["agree"] else f"DISAGREEMENT on {len(res['disagreements'])} instance(s)")
    return "\n".join(lines) + "\n"


def cmd_bench(args):
    try:
        config = BenchConfig(
            sizes=args.sizes,
            entry_range=(args.entry_min, args.entry_max),
            seed=args.seed,
            strategies=args.strategies,
            repetitions=args.repetitions,
            threads=args.threads,
        )
    except ConfigError as exc:
        raise UsageError(f"config error: {exc}") from None
    report = run_bench(config)
    res = report.to_dict()
    key = json.dumps(res["config"], sort_keys=True)
    code = EXIT_OK if report.agree else EXIT_COUNTEREXAMPLE
    if not report.agree:
        for d in report.disagreements:
            print(f"error: strategies disagree at size {d['size']} instance {d['instance']}: {d['values']}",
                  file=sys.stderr)
    return code, RunRecord("bench", [], digest(key), res), _bench_table(res)


COMMANDS = {"det": cmd_det, "macmahon": cmd_macmahon, "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code, record, table = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if record is None:
        return code
    record.argv = argv
    text = record.to_json()
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    sys.stdout.write(text if args.format == "structured" else table)
    return code


if __name__ == "__main__":
    sys.exit(main())
