"""Command-line front end.

Exit codes: 0 success / equal / connected, 1 different or failed
verification, 2 usage or parse error, 3 inconclusive search.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gauss, presentations, rewriting
from .automorphism import format_automorphism
from .render import render_ascii, render_svg
from .words import ParseError, equal, evaluate, format_word, parse, permutation, random_word

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _word(args, text):
    return parse(text, args.n)


def cmd_eval(args):
    f = evaluate(_word(args, args.word))
    if args.json:
        print(json.dumps({
            "images": [str(w) for w in f.images],
            "perm": list(f.permutation),
            "signs": list(f.signs),
        }))
    else:
        print(format_automorphism(f))
    return EXIT_OK


def cmd_equal(args):
    same = equal(_word(args, args.word1), _word(args, args.word2))
    print("equal" if same else "different")
    return EXIT_OK if same else EXIT_DIFFERENT


def cmd_perm(args):
    p = list(permutation(_word(args, args.word)))
    print(json.dumps({"perm": p}) if args.json else "[" + ", ".join(map(str, p)) + "]")
    return EXIT_OK


def cmd_to_gauss(args):
    sys.stdout.write(gauss.dumps(gauss.from_word(_word(args, args.word))))
    return EXIT_OK


def cmd_from_gauss(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    print(format_word(gauss.realize(gauss.loads(text))))
    return EXIT_OK


def _rules(args, *words):
    ext = args.extended or any(t.kind == "t" for w in words for t in w.tokens)
    return rewriting.rule_table(args.n, ext)


def cmd_simplify(args):
    w = _word(args, args.word)
    print(format_word(rewriting.simplify(w, budget=args.budget, rules=_rules(args, w))))
    return EXIT_OK


def cmd_search(args):
    w1 = _word(args, args.word1)
    if args.replay:
        with open(args.replay, encoding="utf-8") as fh:
            path = rewriting.parse_path(fh.read())
        print(format_word(rewriting.replay(w1, path)))
        return EXIT_OK
    if args.word2 is None:
        raise ValueError("search needs a second word (or --replay FILE)")
    w2 = _word(args, args.word2)
    res = rewriting.bfs_equivalent(
        w1, w2, args.depth, max_states=args.max_states, rules=_rules(args, w1, w2)
    )
    if not res.connected:
        print("inconclusive")
        return EXIT_INCONCLUSIVE
    sys.stdout.write(rewriting.format_path(res.path))
    return EXIT_OK


def cmd_verify(args):
    report = presentations.verify(presentations.PRESENTATIONS[args.name](args.n))
    print(json.dumps(report.as_dict(), indent=2) if args.json else report.table())
    return EXIT_OK if report.passed else EXIT_DIFFERENT


def cmd_random(args):
    print(format_word(random_word(args.n, args.length, args.seed, args.extended)))
    return EXIT_OK


def cmd_render(args):
    w = _word(args, args.word)
    sys.stdout.write(render_svg(w) if args.svg else render_ascii(w))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopbraid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    def strands(sp):
        sp.add_argument("-n", type=int, required=True, help="number of strands")

    sp = verb("eval", cmd_eval, "print the automorphism of a word")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("--json", action="store_true")

    sp = verb("equal", cmd_equal, "decide whether two words are equal")
    strands(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")

    sp = verb("perm", cmd_perm, "print the permutation of a word")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("--json", action="store_true")

    sp = verb("to-gauss", cmd_to_gauss, "word to Gauss diagram JSON")
    strands(sp)
    sp.add_argument("word")

    sp = verb("from-gauss", cmd_from_gauss, "Gauss diagram JSON to a word")
    sp.add_argument("file", help="JSON file, or - for stdin")

    sp = verb("simplify", cmd_simplify, "shorten a word by rewriting")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("--extended", action="store_true")
    sp.add_argument("--budget", type=int, default=2000)

    sp = verb("search", cmd_search, "look for a move path between two words")
    strands(sp)
    sp.add_argument("word1")
    sp.add_argument("word2", nargs="?")
    sp.add_argument("--depth", type=int, default=6)
    sp.add_argument("--max-states", type=int, default=200_000)
    sp.add_argument("--extended", action="store_true")
    sp.add_argument("--replay", metavar="FILE", help="apply a JSON-lines move path to word1")

    sp = verb("verify-presentation", cmd_verify, "check every relator of a presentation")
    sp.add_argument("name", choices=sorted(presentations.PRESENTATIONS))
    strands(sp)
    sp.add_argument("--json", action="store_true", help="print a JSON report instead of the table")

    sp = verb("random", cmd_random, "print a random word")
    strands(sp)
    sp.add_argument("--length", type=int, default=10)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--extended", action="store_true")

    sp = verb("render", cmd_render, "draw a word")
    strands(sp)
    sp.add_argument("word")
    sp.add_argument("--svg", action="store_true")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
