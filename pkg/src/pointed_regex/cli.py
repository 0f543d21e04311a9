"""Command-line frontend.

Exit codes: 0 accept or success, 1 reject or mismatch, 2 usage, parse or
construction error.  Artifacts go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys

from .automata import CONSTRUCTIONS, export_dot, export_json, isomorphic, minimize, run_dfa
from .derivatives import derivative_match
from .errors import RegexError
from .generate import random_regex
from .oracle import all_words, member_oracle
from .pointed import initial_pre, is_final, move_pre, move_star
from .syntax import is_literal_char, parse, render, render_pre, symbols

EXIT_OK, EXIT_REJECT, EXIT_ERROR = 0, 1, 2
MAX_COMPARE_LEN = 8

ENGINES = {
    "pointed": lambda r, w: is_final(move_star(initial_pre(r), w)),
    "derivative": derivative_match,
    "oracle": member_oracle,
}


class UsageError(Exception):
    pass


def cmd_compile(args) -> int:
    d = CONSTRUCTIONS[args.construction](parse(args.regex))
    if args.minimize:
        d = minimize(d)
    text = export_dot(d) if args.format == "dot" else export_json(d) + "\n"
    sys.stdout.write(text)
    return EXIT_OK


def cmd_match(args) -> int:
    accepted = ENGINES[args.engine](parse(args.regex), args.word)
    print("ACCEPT" if accepted else "REJECT")
    return EXIT_OK if accepted else EXIT_REJECT


def cmd_trace(args) -> int:
    p = initial_pre(parse(args.regex))
    print(render_pre(p))
    for a in args.word:
        p = move_pre(p, a)
        print(render_pre(p))
    print("ACCEPT" if is_final(p) else "REJECT")
    return EXIT_OK


def cmd_compare(args) -> int:
    if not 0 <= args.max_len <= MAX_COMPARE_LEN:
        raise UsageError(f"maxLen must be between 0 and {MAX_COMPARE_LEN}")
    r = parse(args.regex)
    dfas = {name: build(r) for name, build in CONSTRUCTIONS.items()}
    print(" ".join(f"{name}={d.size}" for name, d in dfas.items()))

    checked, disagreements = 0, []
    for w in all_words("".join(symbols(r)), args.max_len):
        checked += 1
        verdicts = {name: run_dfa(d, w) for name, d in dfas.items()}
        verdicts["matcher"] = derivative_match(r, w)
        verdicts["oracle"] = member_oracle(r, w)
        if len(set(verdicts.values())) > 1:
            disagreements.append(w)
    print(f"words checked: {checked} (length <= {args.max_len})")
    for w in disagreements[:10]:
        print(f"disagreement on {w!r}")

    iso = isomorphic(dfas["quotient"], dfas["derivative-quotient"])
    print(f"quotients isomorphic: {'yes' if iso else 'no'}")
    ok = iso and not disagreements
    print("OK" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_REJECT


def cmd_gen(args) -> int:
    if args.max_leaves < 1:
        raise UsageError("maxLeaves must be at least 1")
    if args.count < 0:
        raise UsageError("count must be non-negative")
    alphabet = "".join(dict.fromkeys(args.alphabet))
    if not alphabet or not all(is_literal_char(c) for c in alphabet):
        raise UsageError("alphabet must be a non-empty string of letters and digits")
    print(f"seed {args.seed}", file=sys.stderr)
    rng = random.Random(args.seed)
    for _ in range(args.count):
        print(render(random_regex(rng, args.max_leaves, alphabet)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pointed-regex", description="Pointed regular expressions and derivatives.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="build an automaton and print it")
    p.add_argument("regex")
    p.add_argument("--construction", choices=list(CONSTRUCTIONS), default="pointed")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("match", help="decide membership of a word")
    p.add_argument("regex")
    p.add_argument("word")
    p.add_argument("--engine", choices=list(ENGINES), default="pointed")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("trace", help="show the pre after each symbol")
    p.add_argument("regex")
    p.add_argument("word")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("compare", help="cross-check all constructions")
    p.add_argument("regex")
    p.add_argument("max_len", metavar="maxLen", type=int)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="print seeded random regexes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-leaves", "--maxLeaves", dest="max_leaves", type=int, default=8)
    p.add_argument("--alphabet", default="abc")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RegexError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
