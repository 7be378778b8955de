"""Command-line front end.

    numclass translate --lexicon LEX [--agreement] [--explain] [--role ROLE] < lines
    numclass table --lexicon LEX
    numclass lint --lexicon LEX

Exit codes: 0 success, 1 line errors or lint findings, 2 lexicon failure.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from numclass.lexicon import LexiconError, lint_lexicon, load_lexicon_file
from numclass.pipeline import translate_line
from numclass.realizer import Role
from numclass.tables import missing_lemmas, render_tables

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_LOAD = 2


def _load(path: str):
    try:
        return load_lexicon_file(path)
    except OSError as exc:
        print(f"error: cannot read lexicon: {exc}", file=sys.stderr)
    except LexiconError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
    return None


def cmd_translate(args: argparse.Namespace) -> int:
    lex = _load(args.lexicon)
    if lex is None:
        return EXIT_LOAD
    role = Role(args.role)
    status = EXIT_OK
    for lineno, raw in enumerate(sys.stdin, 1):
        line = raw.rstrip("\r\n")
        rec = translate_line(line, lex, role)
        if not rec.ok:
            print(f"line {lineno}: {rec.error}", file=sys.stderr)
            print("ERROR")
            status = EXIT_FINDINGS
            continue
        fields = [rec.rendered]
        if args.agreement:
            fields.append(rec.output.agreement.value)
        if args.explain:
            fields.append(rec.trace)
        print("\t".join(fields))
    return status


def cmd_table(args: argparse.Namespace) -> int:
    lex = _load(args.lexicon)
    if lex is None:
        return EXIT_LOAD
    missing = missing_lemmas(lex)
    if missing:
        print(f"error: lexicon lacks reference lemmas: {', '.join(missing)}", file=sys.stderr)
        return EXIT_LOAD
    sys.stdout.write(render_tables(lex))
    return EXIT_OK


def cmd_lint(args: argparse.Namespace) -> int:
    lex = _load(args.lexicon)
    if lex is None:
        return EXIT_LOAD
    diags = lint_lexicon(lex)
    for d in diags:
        print(d)
    return EXIT_FINDINGS if diags else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", required=True, metavar="PATH", help="lexicon JSON document")

    parser = argparse.ArgumentParser(
        prog="numclass",
        description="Translate Japanese numeral-classifier noun phrases into English.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("translate", parents=[common], help="translate stdin line by line")
    tr.add_argument("--agreement", action="store_true", help="append sg/pl verb agreement")
    tr.add_argument("--explain", action="store_true", help="append the transfer trace")
    tr.add_argument(
        "--role",
        choices=[r.value for r in Role],
        default=Role.REFERENTIAL.value,
        help="rendering of same-dimension attribute phrases",
    )
    tr.set_defaults(func=cmd_translate)

    tb = sub.add_parser("table", parents=[common], help="regenerate the classifier tables")
    tb.set_defaults(func=cmd_table)

    li = sub.add_parser("lint", parents=[common], help="report lexicon warnings")
    li.set_defaults(func=cmd_lint)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
