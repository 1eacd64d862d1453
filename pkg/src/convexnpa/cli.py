"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import constructions
from .automata import Dpa, Npa, ValidationError, Wfa, dpa_as_npa
from .lrs import lrs_eval, parse_lrs, wfa_to_lrs, zero_set_prefix
from .metric import LanguageHandle, MetricQuery, word_differences, word_horizon
from .semantics import (
    DEFAULT_CAP,
    Algebra,
    EnumerationCapExceeded,
    UnknownSymbolError,
    as_word,
    evaluate,
    evaluate_wfa,
    oracle_check,
)
from .textformat import ParseError, format_automaton, load_automaton, parse_rat

EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_CAP = 3

GENERATORS = ("example", "dual", "threshold-Y", "threshold-Z")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def render(x: Fraction, digits: int | None = None) -> str:
    """``p/q``, optionally followed by a rounded decimal for display."""
    text = str(x)
    if digits is None:
        return text
    scaled = round(abs(x) * 10**digits)
    whole, frac = divmod(scaled, 10**digits)
    dec = str(whole) if digits == 0 else "%d.%0*d" % (whole, digits, frac)
    if x < 0 and scaled:
        dec = "-" + dec
    return "%s (~%s)" % (text, dec)


def render_word(word, alphabet) -> str:
    if not word:
        return "ε"
    if all(len(sym) == 1 for sym in alphabet):
        return "".join(word)
    return ".".join(word)


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _algebra(args, override=None) -> Algebra:
    if override is not None:
        return Algebra(override)
    return Algebra.MIN if args.algebra == "min" else Algebra.MAX


def _load_npa(path) -> Npa:
    a = load_automaton(path)
    if isinstance(a, Dpa):
        return dpa_as_npa(a)
    if isinstance(a, Wfa):
        raise ValidationError("%s: expected an npa or dpa file, got a wfa" % path)
    return a


def cmd_eval(args, out) -> int:
    a = load_automaton(args.file)
    word = as_word(args.word)
    if isinstance(a, Wfa):
        value = evaluate_wfa(a, word)
    else:
        if isinstance(a, Dpa):
            a = dpa_as_npa(a)
        value = evaluate(a, word, _algebra(args))
    print(render(value, args.decimal), file=out)
    return 0


def cmd_metric(args, out) -> int:
    try:
        q = MetricQuery(args.c, args.kappa)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    a1, a2 = _load_npa(args.file1), _load_npa(args.file2)
    if a1.alphabet != a2.alphabet:
        raise ValidationError(
            "alphabet mismatch: %s vs %s" % (" ".join(a1.alphabet), " ".join(a2.alphabet))
        )
    l1 = LanguageHandle.from_npa(a1, _algebra(args, args.alg1))
    l2 = LanguageHandle.from_npa(a2, _algebra(args, args.alg2))
    rows = list(word_differences(l1, l2, q))
    x = sum((r.contribution for r in rows), Fraction(0))
    d = args.decimal
    print("x: %s" % render(x, d), file=out)
    print("horizon: %d" % word_horizon(q), file=out)
    print("tail_bound: %s" % render(q.tail_bound, d), file=out)
    top = sorted(rows, key=lambda r: -r.contribution)[: args.top]
    print("# word weight1 weight2 |diff| contribution", file=out)
    for r in top:
        print(
            " ".join(
                [render_word(r.word, a1.alphabet)]
                + [str(v) for v in (r.weight1, r.weight2, r.diff, r.contribution)]
            ),
            file=out,
        )
    return 0


def cmd_generate(args, out) -> int:
    which = args.which
    if which == "example":
        result = constructions.example_npa()
    elif which == "dual":
        base = _load_npa(args.file) if args.file else constructions.example_npa()
        result = constructions.dualize(base)
    else:
        if not args.file:
            raise UsageError("%s needs a dpa file" % which)
        if args.kappa is None:
            raise UsageError("%s needs --kappa" % which)
        x = load_automaton(args.file)
        if not isinstance(x, Dpa):
            raise ValidationError("%s: threshold constructions need a dpa file" % args.file)
        try:
            y, z = constructions.threshold_reduction(x, args.kappa)
        except ValueError as exc:
            if isinstance(exc, ValidationError):
                raise
            raise UsageError(str(exc)) from None
        result = y if which == "threshold-Y" else z
    out.write(format_automaton(result))
    return 0


def cmd_oracle_check(args, out, evaluator=evaluate) -> int:
    a = _load_npa(args.file)
    mismatch = oracle_check(a, args.length, evaluator=evaluator, cap=args.cap)
    if mismatch is None:
        print("OK", file=out)
        return 0
    word, alg, got, expected = mismatch
    print(
        "MISMATCH word=%s algebra=%s evaluate=%s oracle=%s"
        % (render_word(word, a.alphabet), alg.value, got, expected),
        file=out,
    )
    return 4


def cmd_lrs(args, out) -> int:
    if args.lrs_command == "eval":
        l = parse_lrs(args.lrs)
        if args.n < 0:
            raise UsageError("index must be nonnegative")
        print(render(lrs_eval(l, args.n), args.decimal), file=out)
    elif args.lrs_command == "from-wfa":
        w = load_automaton(args.file)
        if not isinstance(w, Wfa):
            raise ValidationError("%s: expected a wfa file" % args.file)
        try:
            print(wfa_to_lrs(w), file=out)
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
    else:
        l = parse_lrs(args.lrs)
        print(" ".join(map(str, zero_set_prefix(l, args.bound))), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="convexnpa", description="Convex language semantics of probabilistic automata.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def algebra_flags(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--min", dest="algebra", action="store_const", const="min")
        g.add_argument("--max", dest="algebra", action="store_const", const="max")
        p.set_defaults(algebra="max")

    def decimal_flag(p):
        p.add_argument("--decimal", type=int, metavar="N", help="also print a decimal with N digits")

    p = sub.add_parser("eval", help="weight of a word")
    p.add_argument("file")
    p.add_argument("word", nargs="?", default="", help="space-separated symbols, quoted")
    algebra_flags(p)
    decimal_flag(p)

    p = sub.add_parser("metric", help="approximate the discounted distance of two automata")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--c", type=_rat_arg, required=True)
    p.add_argument("--kappa", type=_rat_arg, required=True)
    p.add_argument("--alg1", choices=("min", "max"))
    p.add_argument("--alg2", choices=("min", "max"))
    p.add_argument("--top", type=int, default=10)
    algebra_flags(p)
    decimal_flag(p)

    p = sub.add_parser("generate", help="print a built-in construction")
    p.add_argument("which", choices=GENERATORS)
    p.add_argument("file", nargs="?")
    p.add_argument("--kappa", type=_rat_arg)

    p = sub.add_parser("oracle-check", help="compare evaluation with exhaustive enumeration")
    p.add_argument("file")
    p.add_argument("--length", type=int, default=4)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("lrs", help="linear recurrence sequences")
    lsub = p.add_subparsers(dest="lrs_command", required=True, parser_class=_Parser)
    q = lsub.add_parser("eval")
    q.add_argument("lrs", help="e.g. 'lrs k=2 init=0,1 coeffs=1,1'")
    q.add_argument("n", type=int)
    decimal_flag(q)
    q = lsub.add_parser("from-wfa")
    q.add_argument("file")
    q = lsub.add_parser("zeros")
    q.add_argument("lrs")
    q.add_argument("bound", type=int)

    return parser


COMMANDS = {
    "eval": cmd_eval,
    "metric": cmd_metric,
    "generate": cmd_generate,
    "oracle-check": cmd_oracle_check,
    "lrs": cmd_lrs,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ValidationError, UnknownSymbolError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except EnumerationCapExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())
