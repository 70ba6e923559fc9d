"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 parse error, 3 resource guard hit.
"""
from __future__ import annotations

import argparse
import json
import sys

from .automaton import AutomatonError, ResourceLimit, behavior
from .closure import RegexSyntaxError, compile_regex, concat, parse_regex, star, union
from .density import density, density_prefix, density_system, estimate_growth, path_counting
from .documents import (
    DocumentError,
    automaton_from_document,
    automaton_to_document,
    dumps,
    higher_degree_from_document,
    recurrence_from_document,
    recurrence_to_document,
)
from .language import (
    DEFAULT_MAX_STATES,
    DEFAULT_MAX_WORDS,
    LanguageError,
    cross_section,
    determinize,
    enumerate_up_to,
    is_deterministic,
    member,
    to_grammar,
)
from .recurrence import RecurrenceError, automaton_to_recurrence, reduce_to_first_order
from .semiring import EPSILON, SemiringError

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3
CLASSIFY_LENGTH = 64


class ParseFailure(Exception):
    pass


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseFailure(f"{path}: invalid JSON: {exc}") from None


def _automaton(path):
    return automaton_from_document(_read_json(path))


def _word(w: str) -> str:
    return "&" if w == EPSILON else w


def _print_words(words, out):
    for w in words:
        out.write(_word(w) + "\n")


def _notice_if_nondeterministic(A, err):
    if not is_deterministic(A):
        err.write("note: automaton is nondeterministic; determinizing before counting\n")


def cmd_compile(args, out, err):
    ast = parse_regex(args.regex, args.alphabet)
    out.write(dumps(automaton_to_document(compile_regex(ast, args.alphabet))))


def cmd_cross_section(args, out, err):
    A = _automaton(args.document)
    _print_words(cross_section(A, args.n, args.max_words).words, out)


def cmd_enumerate(args, out, err):
    A = _automaton(args.document)
    for section in enumerate_up_to(A, args.n, args.max_words):
        out.write(f"# n={section.n}\n")
        _print_words(section.words, out)


def cmd_member(args, out, err):
    A = _automaton(args.document)
    word = "" if args.word == "&" else args.word
    out.write(("true" if member(A, word) else "false") + "\n")


def cmd_density(args, out, err):
    A = _automaton(args.document)
    _notice_if_nondeterministic(A, err)
    if args.matrix_power:
        values = [density(A, n, matrix_power=True) for n in range(args.n + 1)]
    else:
        values = density_prefix(A, args.n)
    for n, v in enumerate(values):
        out.write(f"{n}\t{v}\n")
    if args.classify:
        prefix = values if len(values) >= CLASSIFY_LENGTH else density_prefix(A, CLASSIFY_LENGTH - 1)
        out.write(f"class: {estimate_growth(prefix)}\n")


def cmd_paths(args, out, err):
    A = _automaton(args.document)
    out.write(f"{behavior(path_counting(A.counting()), args.n)}\n")


def cmd_ops(args, out, err):
    automata = [_automaton(p) for p in args.documents]
    expected = 1 if args.operation == "star" else 2
    if len(automata) != expected:
        raise DocumentError(f"{args.operation} takes {expected} document(s), got {len(automata)}")
    if args.operation == "union":
        result = union(*automata)
    elif args.operation == "concat":
        result = concat(*automata)
    else:
        result = star(*automata)
    out.write(dumps(automaton_to_document(result)))


def cmd_determinize(args, out, err):
    A = _automaton(args.document)
    out.write(dumps(automaton_to_document(determinize(A, args.max_states))))


def cmd_grammar(args, out, err):
    out.write(to_grammar(_automaton(args.document)).to_text())


def cmd_recurrence(args, out, err):
    A = _automaton(args.document)
    if args.density:
        system = density_system(A, require_deterministic=False).system
    else:
        system = automaton_to_recurrence(A.counting())
    out.write(dumps(recurrence_to_document(system)))


def cmd_reduce(args, out, err):
    doc = _read_json(args.document)
    if "equations" in doc:
        reduced = reduce_to_first_order(higher_degree_from_document(doc)).system
    else:
        reduced = recurrence_from_document(doc)
    out.write(dumps(recurrence_to_document(reduced)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recurlang",
        description="Counting automata, linear recurrences and densities of regular languages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def doc_arg(p):
        p.add_argument("document", nargs="?", default="-", help="automaton JSON file ('-' for stdin)")

    def guard_arg(p):
        p.add_argument("--max-words", type=int, default=DEFAULT_MAX_WORDS)

    p = sub.add_parser("compile", help="compile a regular expression to an automaton document")
    p.add_argument("regex")
    p.add_argument("--alphabet", required=True)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("cross-section", help="words of length n")
    doc_arg(p)
    p.add_argument("n", type=int)
    guard_arg(p)
    p.set_defaults(func=cmd_cross_section)

    p = sub.add_parser("enumerate", help="cross-sections for lengths 0..N")
    doc_arg(p)
    p.add_argument("n", metavar="N", type=int)
    guard_arg(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("member", help="test whether a word is recognized ('&' is the empty word)")
    doc_arg(p)
    p.add_argument("word")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("density", help="number of words of each length 0..N")
    doc_arg(p)
    p.add_argument("n", metavar="N", type=int)
    p.add_argument("--matrix-power", action="store_true")
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("paths", help="number of successful paths of length n")
    doc_arg(p)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("ops", help="union, concatenation or star of automaton documents")
    p.add_argument("operation", choices=["union", "concat", "star"])
    p.add_argument("documents", nargs="+")
    p.set_defaults(func=cmd_ops)

    p = sub.add_parser("determinize", help="subset construction")
    doc_arg(p)
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.set_defaults(func=cmd_determinize)

    p = sub.add_parser("grammar", help="right-linear grammar of an automaton")
    doc_arg(p)
    p.set_defaults(func=cmd_grammar)

    p = sub.add_parser("recurrence", help="recurrence system of an automaton")
    doc_arg(p)
    p.add_argument("--density", action="store_true", help="emit the letter-count system instead")
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("reduce", help="reduce a higher-degree system to first order")
    doc_arg(p)
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if getattr(args, "n", 0) < 0:
        err.write("error: length must be non-negative\n")
        return EXIT_INVALID
    try:
        args.func(args, out, err)
    except (RegexSyntaxError, ParseFailure) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except ResourceLimit as exc:
        err.write(f"error: {exc}\n")
        return EXIT_GUARD
    except (DocumentError, LanguageError, AutomatonError, RecurrenceError, SemiringError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
