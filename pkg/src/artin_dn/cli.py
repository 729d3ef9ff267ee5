"""
Command-line front end.

    artin-dn nf D5 "t1 t2 t1^-1"
    artin-dn equal A4 "s1 s2 s1" "s2 s1 s2"
    artin-dn apply hom.json "t1 t4^-1"
    artin-dn verify hom.json
    artin-dn lift candidate.json
    artin-dn sweep 4 7 -1..1 -1..1 --jobs 4

Exit codes: 0 success or true, 1 semantic false, 2 input error, 3 lift failure.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import checks
from .coxeter import CoxType
from .garside import normalize
from .homs import HomSpecFormatError, apply, dump_hom, failing_relations, load_hom
from .kernel import LiftError, LiftInput, lift_with_corrections
from .words import ArtinWord, WordParseError, format_word, parse_word

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_LIFT = 0, 1, 2, 3

_RANGE = re.compile(r"(-?\d+)\.\.(-?\d+)")


class InputError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """
    >>> parse_range("-1..1")
    [-1, 0, 1]
    >>> parse_range("3")
    [3]
    """
    text = text.strip()
    m = _RANGE.fullmatch(text)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a > b:
            raise InputError(f"bad range {text!r}: start exceeds end")
        return list(range(a, b + 1))
    try:
        return [int(text)]
    except ValueError:
        raise InputError(f"bad range {text!r}; expected a..b") from None


def _group(text: str) -> CoxType:
    try:
        return CoxType.parse(text)
    except ValueError as exc:
        message = str(exc)
        if repr(text) not in message:
            message = f"bad group designator {text!r}: {message}"
        raise InputError(message) from None


def _word(typ: CoxType, text: str, max_len: int) -> ArtinWord:
    try:
        return parse_word(typ, text, max_len)
    except WordParseError as exc:
        raise InputError(str(exc)) from None


def _split_group(args: argparse.Namespace, count: int) -> tuple[CoxType, list[str]]:
    """Group from --group or from the first positional, then exactly `count` words."""
    rest = list(args.args)
    if args.group is None:
        if not rest:
            raise InputError("missing group designator")
        group = rest.pop(0)
    else:
        group = args.group
    if len(rest) != count:
        raise InputError(f"expected {count} word argument(s), got {len(rest)}")
    return _group(group), rest


def _read_hom(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return load_hom(text)
    except HomSpecFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_nf(args: argparse.Namespace) -> int:
    typ, (text,) = _split_group(args, 1)
    print(normalize(_word(typ, text, args.max_len)).render())
    return EXIT_OK


def cmd_equal(args: argparse.Namespace) -> int:
    typ, (t1, t2) = _split_group(args, 2)
    same = normalize(_word(typ, t1, args.max_len)) == normalize(_word(typ, t2, args.max_len))
    print("equal" if same else "distinct")
    return EXIT_OK if same else EXIT_FALSE


def cmd_apply(args: argparse.Namespace) -> int:
    h = _read_hom(args.homfile)
    if args.group is not None and _group(args.group) != h.source:
        raise InputError(f"--group {args.group} does not match the source {h.source} of {args.homfile}")
    image = apply(h, _word(h.source, args.word, args.max_len))
    print(format_word(image.free_reduce()) if args.reduce else format_word(image))
    if args.nf:
        print(normalize(image).render())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    h = _read_hom(args.homfile)
    bad = failing_relations(h)
    for a, b, m in bad:
        kind = "braid" if m == 3 else "commuting"
        print(f"fail: {kind} relation {h.source.letter}{a}, {h.source.letter}{b}")
    print("pass" if not bad else "fail")
    return EXIT_OK if not bad else EXIT_FALSE


def cmd_lift(args: argparse.Namespace) -> int:
    h = _read_hom(args.file)
    try:
        data = LiftInput.from_hom(h)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{args.file}: {exc}") from None
    try:
        lift = lift_with_corrections(data)
    except LiftError as exc:
        a, b, m = exc.relation
        print(f"lift failed ({exc.kind}): relation t{a}, t{b} (m={m}): {exc}", file=sys.stderr)
        return EXIT_LIFT
    out = lift.hom if not h.label else type(lift.hom)(lift.hom.source, lift.hom.target, lift.hom.images, h.label)
    sys.stdout.write(dump_hom(out))
    print("corrections: " + " ".join(str(k) for k in lift.corrections), file=sys.stderr)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    ps, qs = parse_range(args.p_range), parse_range(args.q_range)
    if args.n_min < 4 or args.n_max < args.n_min:
        raise InputError(f"bad rank range {args.n_min}..{args.n_max}; need 4 <= n_min <= n_max")
    families = checks.FAMILIES if not args.families else tuple(args.families.split(","))
    try:
        cells = checks.plan(
            args.n_min, args.n_max, ps, qs,
            families=families, rewrites=args.rewrites, samples=args.samples, seed=args.seed,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
    reports = checks.summarize(checks.run_cells(cells, jobs))
    ok = all(r.ok for r in reports)
    if args.json:
        doc = {
            "n_range": [args.n_min, args.n_max],
            "p_values": ps,
            "q_values": qs,
            "families": [
                {"family": r.family, "passed": r.passed, "failed": r.failed, "failures": r.failures}
                for r in reports
            ],
            "ok": ok,
        }
        print(json.dumps(doc, indent=2))
    else:
        width = max(len(f) for f in checks.FAMILIES)
        for r in reports:
            status = "PASS" if r.ok else "FAIL"
            print(f"{status} {r.family:<{width}} passed={r.passed} failed={r.failed}")
            for f in r.failures:
                print(f"    {f}")
        print("all families pass" if ok else "some families fail")
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artin-dn", description="Word problem and homomorphisms for A[A_{n-1}] and A[D_n].")
    parser.add_argument("--max-len", type=int, default=10000, help="longest accepted input word (default 10000)")
    sub = parser.add_subparsers(dest="command", required=True)

    def grouped(name: str, help_: str, nwords: str):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--group", help="group designator A<k> or D<n>; otherwise the first argument")
        p.add_argument("args", nargs="+", metavar="ARG", help=f"[GROUP] {nwords}")
        return p

    grouped("nf", "print the normal form of a word", "WORD").set_defaults(func=cmd_nf)
    grouped("equal", "decide whether two words are equal", "WORD1 WORD2").set_defaults(func=cmd_equal)

    p = sub.add_parser("apply", help="apply a homomorphism file to a word")
    p.add_argument("homfile")
    p.add_argument("word")
    p.add_argument("--group", help="check that the word's group matches the file's source")
    p.add_argument("--reduce", action="store_true", help="freely reduce the image")
    p.add_argument("--nf", action="store_true", help="also print the normal form of the image")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="check every defining relation on the images")
    p.add_argument("homfile")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lift", help="lift an endomorphism of the central quotient of A[D_n]")
    p.add_argument("file")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("sweep", help="run every identity family over a parameter grid")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("p_range", help="a..b")
    p.add_argument("q_range", help="a..b")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--jobs", type=int, default=1, help="worker processes; 0 means one per CPU")
    p.add_argument("--samples", type=int, default=500, help="random words per (n, p) for the gamma_p check")
    p.add_argument("--rewrites", type=int, default=1000, help="rewrite round trips per (type, n)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--families", help="comma-separated subset of: " + ", ".join(checks.FAMILIES))
    p.set_defaults(func=cmd_sweep)
    return parser


def _protect_ranges(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1..1" as an option; a leading space hides the dash and int() ignores it
    return [f" {a}" if a.startswith("-") and _RANGE.fullmatch(a) else a for a in argv]


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_ranges(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
