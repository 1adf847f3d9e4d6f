"""
The ``forgot`` command line tool.

Subcommands expose the library operations (classes, class-of, canonical,
insert, ribbons, phi, ns, commute) and the exhaustive verification suites
(verify).  All results go to stdout, errors to stderr.  Exit codes: 0 on
success, 1 on a property violation, 2 on a parse error, 3 on a domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import forgotten, qsym, verify, words
from .perms import ParseError, format_permutation, parse_permutation
from .qsym import ExpansionMismatch

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3

CLOSURE_CAP = 9
LISTING_CAP = 50
SHAPE_CAP = 20
COMMUTE_ALPHABET_CAP = 5
COMMUTE_DEGREE_CAP = 8


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> int:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def _cmd_classes(args: argparse.Namespace) -> int:
    n = args.n
    _require(n >= 2, f"need n >= 2, got {n}")
    _require(n <= LISTING_CAP or args.force, f"n={n} beyond the listing cap {LISTING_CAP} (use --force)")
    with_sizes = n <= CLOSURE_CAP
    records = []
    for key in forgotten.all_class_keys(n):
        canonical = forgotten.canonical_of_key(key)
        record = {"key": key.to_json_dict(), "canonical": list(canonical)}
        if with_sizes:
            record["size"] = len(forgotten.class_closure(canonical))
        records.append((key, canonical, record))
    payload = {"n": n, "classes": [record for _, _, record in records]}
    lines = []
    for key, canonical, record in records:
        line = f"{key}  canonical={format_permutation(canonical)}"
        if "size" in record:
            line += f"  size={record['size']}"
        lines.append(line)
    return _emit(args, payload, lines)


def _cmd_class_of(args: argparse.Namespace) -> int:
    p = parse_permutation(args.perm)
    _require(len(p) >= 2, "need a permutation of size >= 2")
    _require(len(p) <= CLOSURE_CAP or args.force, f"n={len(p)} beyond the closure cap {CLOSURE_CAP} (use --force)")
    key = forgotten.class_key(p)
    members = sorted(forgotten.class_closure(p))
    canonical = forgotten.canonical_of(p)
    payload = {
        "key": key.to_json_dict(),
        "canonical": list(canonical),
        "size": len(members),
        "members": [list(m) for m in members],
    }
    lines = [
        f"key: {key}",
        f"canonical: {format_permutation(canonical)}",
        f"size: {len(members)}",
        "members: " + " ".join(format_permutation(m) for m in members),
    ]
    return _emit(args, payload, lines)


def _cmd_canonical(args: argparse.Namespace) -> int:
    key = forgotten.parse_class_key(args.key)
    form = forgotten.form_of_key(key)
    word = forgotten.canonical_word(form)
    payload = {"key": key.to_json_dict(), "canonical": list(word), "form": str(form)}
    lines = [f"canonical: {format_permutation(word)}", f"form: {form}"]
    return _emit(args, payload, lines)


def _cmd_insert(args: argparse.Namespace) -> int:
    w = parse_permutation(args.word)
    result = forgotten.insert(w, args.letter)
    form = forgotten.form_of_key(forgotten.class_key(result))
    payload = {"result": list(result), "form": str(form)}
    lines = [f"result: {format_permutation(result)}", f"form: {form}"]
    return _emit(args, payload, lines)


def _cmd_ribbons(args: argparse.Namespace) -> int:
    if (args.key is None) == (args.perm is None):
        raise ValueError("give exactly one of --key or --perm")
    if args.key is not None:
        key = forgotten.parse_class_key(args.key)
    else:
        key = forgotten.class_key(parse_permutation(args.perm))
    _require(key.n <= SHAPE_CAP or args.force, f"n={key.n} beyond the expansion cap {SHAPE_CAP} (use --force)")
    expansion = qsym.ribbon_expansion(key)
    payload = {
        "key": key.to_json_dict(),
        "compositions": [list(parts) for parts in sorted(expansion.compositions)],
    }
    lines = [str(expansion)]
    if args.vars is not None:
        num_vars = args.vars if args.vars > 0 else key.n
        _require(num_vars >= 1, f"need at least one variable, got {num_vars}")
        _require(
            key.n <= CLOSURE_CAP or args.force,
            f"evaluating the sum needs n <= {CLOSURE_CAP} (use --force)",
        )
        total = expansion.evaluate(num_vars)
        payload["vars"] = num_vars
        payload["sum"] = total.to_json_dict()
        lines.append(f"sum[m={num_vars}]: {total}")
    return _emit(args, payload, lines)


def _cmd_phi(args: argparse.Namespace) -> int:
    p = parse_permutation(args.perm)
    image = qsym.foata(p)
    payload = {"input": list(p), "result": list(image)}
    return _emit(args, payload, [format_permutation(image)])


def _cmd_ns(args: argparse.Namespace) -> int:
    p = parse_permutation(args.perm)
    image = qsym.ns_map(p)
    payload = {"input": list(p), "result": list(image)}
    return _emit(args, payload, [format_permutation(image)])


def _cmd_commute(args: argparse.Namespace) -> int:
    q = args.alphabet
    _require(q >= 1, f"need an alphabet of size >= 1, got {q}")
    if not args.force:
        _require(q <= COMMUTE_ALPHABET_CAP, f"alphabet {q} beyond the cap {COMMUTE_ALPHABET_CAP} (use --force)")
        _require(
            args.i + args.j <= COMMUTE_DEGREE_CAP,
            f"degree sum {args.i + args.j} beyond the cap {COMMUTE_DEGREE_CAP} (use --force)",
        )
    commutes = words.commute_check(args.i, args.j, q)
    payload = {"i": args.i, "j": args.j, "alphabet": q, "commutes": commutes}
    lines = [f"e_{args.i} e_{args.j} {'=' if commutes else '!='} e_{args.j} e_{args.i} over 1..{q}"]
    return _emit(args, payload, lines)


def _cmd_confluence(args: argparse.Namespace) -> int:
    q, max_len = args.alphabet, args.max_len
    _require(q >= 1, f"need an alphabet of size >= 1, got {q}")
    if not args.force:
        _require(q <= COMMUTE_ALPHABET_CAP, f"alphabet {q} beyond the cap {COMMUTE_ALPHABET_CAP} (use --force)")
        _require(max_len <= 8, "word length beyond the cap 8 (use --force)")
    found = words.orientation_counterexamples(max_len, q, limit=args.limit)
    payload = {
        "alphabet": q,
        "maxLen": max_len,
        "counterexamples": [
            {"word": list(w), "endpoints": [list(e) for e in endpoints]}
            for w, endpoints in found
        ],
    }
    if not found:
        lines = [f"descending rewrites are confluent on all words of length <= {max_len} over 1..{q}"]
    else:
        lines = [f"{len(found)} counterexample(s) to descending-rewrite confluence (len <= {max_len}, q = {q}):"]
        for w, endpoints in found:
            stalls = "  ".join("(" + ",".join(map(str, e)) + ")" for e in endpoints)
            lines.append(f"  ({','.join(map(str, w))}) stalls at {stalls}")
    return _emit(args, payload, lines)


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_suite(args.suite, max_n=args.max_n, force=args.force)
    passed = sum(1 for r in results if r.passed)
    if args.json:
        payload = {
            "suite": args.suite,
            "passed": passed == len(results),
            "checks": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    "counterexample": r.counterexample,
                }
                for r in results
            ],
        }
        print(json.dumps(payload))
    else:
        for r in results:
            print(r.line())
        print(f"{passed}/{len(results)} checks passed")
    return EXIT_OK if passed == len(results) else EXIT_VIOLATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forgot",
        description="Forgotten-monoid computations and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--force", action="store_true", help="lift the documented safety caps")
        return p

    p = add("classes", _cmd_classes, "list every class of S_n with key and canonical word")
    p.add_argument("--n", type=int, required=True, help="permutation size (sizes included up to n=9)")

    p = add("class-of", _cmd_class_of, "key, canonical word, and full membership of one class")
    p.add_argument("perm", help="permutation, e.g. 12543 or 8,4,2,9,5,6,1,3,7")

    p = add("canonical", _cmd_canonical, "canonical word of a class key")
    p.add_argument("--key", required=True, help="class key, e.g. 5,3,1n or 8,10,n1")

    p = add("insert", _cmd_insert, "insert a letter into a canonical word")
    p.add_argument("word", help="canonical word of size n-1")
    p.add_argument("letter", type=int, help="letter in 0..n-1")

    p = add("ribbons", _cmd_ribbons, "ribbon expansion of a class")
    p.add_argument("--key", help="class key, e.g. 8,10,n1")
    p.add_argument("--perm", help="any member of the class")
    p.add_argument(
        "--vars", type=int, nargs="?", const=0, default=None, metavar="M",
        help="also evaluate the ribbon sum in M variables (omit M to use n)",
    )

    p = add("phi", _cmd_phi, "Foata transform of a permutation")
    p.add_argument("perm")

    p = add("ns", _cmd_ns, "inverse-conjugated Foata transform of a permutation")
    p.add_argument("perm")

    p = add("commute", _cmd_commute, "check e_i e_j = e_j e_i in the quotient")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--alphabet", type=int, default=3, help="alphabet size (default 3)")

    p = add("confluence", _cmd_confluence, "look for counterexamples to descending-rewrite confluence")
    p.add_argument("--alphabet", type=int, default=3, help="alphabet size (default 3)")
    p.add_argument("--max-len", type=int, default=5, help="longest word to scan (default 5)")
    p.add_argument("--limit", type=int, default=5, help="stop after this many counterexamples (default 5)")

    p = add("verify", _cmd_verify, "run an exhaustive verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES), help="which suite to run")
    p.add_argument("--max-n", type=int, default=None, help="cap the sweep size (clamped to suite defaults unless --force)")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ExpansionMismatch as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
