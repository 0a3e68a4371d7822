"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import hyper, metric, reals
from .expr import MAX_PREC, ParseError, eval_expr, parse_expr, render
from .spaces import discrete_name, seq_to_fun
from .universal import u_trace

EXIT_PARSE = 2
EXIT_BUDGET = 3

# names N -> N for `dist`; questions are enumerated by the identity
BUILTIN_NAMES = {
    "zero": lambda n: 0,
    "id": lambda n: n,
    "succ": lambda n: n + 1,
    "square": lambda n: n * n,
    "parity": lambda n: n % 2,
    "step3": lambda n: int(n >= 3),
    "step5": lambda n: int(n >= 5),
}


def seq2fun_source(iq: tuple) -> Fraction:
    """Sequence name used by ``trace seq2fun``: slice ``i`` is the exact name of ``2 - 2**-i``."""
    i, _eps = iq
    return reals.geom2_partial(i)


def _cmd_eval(args, out) -> int:
    try:
        e = parse_expr(args.expr)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    r = eval_expr(e, args.prec)
    print(render(r, args.prec), file=out)
    return 0


def _cmd_trace(args, out) -> int:
    try:
        q = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        print(f"parse error: bad rational {args.q!r}", file=sys.stderr)
        return EXIT_PARSE
    if q <= 0:
        print("parse error: the question is an accuracy and must be positive", file=sys.stderr)
        return EXIT_PARSE
    trace = u_trace(seq_to_fun(seq2fun_source), discrete_name(args.i), q, args.loops)
    for line in trace.lines():
        print(line, file=out)
    if not trace.converged:
        print(f"no answer within {args.loops} loops", file=sys.stderr)
        return EXIT_BUDGET
    return 0


def _cmd_dist(args, out) -> int:
    d = metric.baire_dist(BUILTIN_NAMES[args.phi], BUILTIN_NAMES[args.psi], lambda n: n, args.cutoff)
    print(d, file=out)
    return 0


def _cmd_choice(args, out) -> int:
    try:
        candidate = hyper.candidate_by_name(args.candidate)
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = hyper.choice_adversary(candidate, args.budget)
    if report.name is not None:
        print("fooling name: " + " ".join(map(str, report.prefix(16))), file=out)
    print(f"answer on {{0}}: {_opt(report.first_answer)}", file=out)
    print(f"answer on fooling name: {_opt(report.second_answer)}", file=out)
    if report.witness is not None:
        print(f"fooling set contains: {report.witness}", file=out)
    print(f"verdict: {report.verdict.value}", file=out)
    return EXIT_BUDGET if report.verdict is hyper.Verdict.BUDGET_EXHAUSTED else 0


def _opt(x) -> str:
    return "none" if x is None else str(x)


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _precision(text: str) -> int:
    value = _natural(text)
    if value > MAX_PREC:
        raise argparse.ArgumentTypeError(f"must be at most {MAX_PREC}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realcomp", description="Exact real computation on names.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression to a given binary precision")
    p.add_argument("expr")
    p.add_argument("--prec", type=_precision, default=20, metavar="N")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("trace", help="print the rounds of a dialogue")
    p.add_argument("dialogue", choices=["seq2fun"])
    p.add_argument("--i", type=_natural, required=True, metavar="I")
    p.add_argument("--q", required=True, metavar="QTEXT")
    p.add_argument("--loops", type=_positive, default=8, metavar="L")
    p.set_defaults(run=_cmd_trace)

    p = sub.add_parser("dist", help="Baire distance between two builtin names")
    p.add_argument("--cutoff", type=_positive, required=True, metavar="N")
    p.add_argument("phi", choices=sorted(BUILTIN_NAMES))
    p.add_argument("psi", choices=sorted(BUILTIN_NAMES))
    p.set_defaults(run=_cmd_dist)

    p = sub.add_parser("choice-demo", help="run the closed-choice adversary against a naive realizer")
    p.add_argument("--budget", type=_natural, required=True, metavar="N")
    p.add_argument("--candidate", required=True, metavar="{always-zero|scan-K}")
    p.set_defaults(run=_cmd_choice)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
