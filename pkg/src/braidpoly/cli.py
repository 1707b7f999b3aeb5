"""Command-line front end.

Subcommands: ``compute`` (polynomial by one or all methods), ``analyze``
(full diagram report), ``verify`` (property checks on one word), ``batch``
(one report per input line) and ``selftest`` (corpus property suites).

Exit codes are a stable contract: 0 success, 2 input error, 3 verification
failure.  All behavior is controlled by flags; there are no config files or
environment variables.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .braid import (
    BraidParseError,
    BraidWord,
    ResolvedDiagram,
    classify,
    classify_crossings,
    gap_profile,
    parse_braid,
    permutation,
    writhe,
)
from .checks import (
    check_bijection,
    check_markov,
    check_mirror,
    check_skein,
    run_selftest,
)
from .invariants import alexander, braid_index_certificate
from .jaeger import DUAL, STANDARD, homfly_jaeger
from .polynomial import SubstitutionError
from .resolver import ASCENDING, DESCENDING, homfly

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3

_METHODS = ("descending", "ascending", "jaeger", "jaeger-dual")


def _compute_method(word: BraidWord, method: str) -> LaurentPoly2:
    if method == "descending":
        return homfly(word, DESCENDING)
    if method == "ascending":
        return homfly(word, ASCENDING)
    if method == "jaeger":
        return homfly_jaeger(word, STANDARD)
    if method == "jaeger-dual":
        return homfly_jaeger(word, DUAL)
    raise ValueError(f"unknown method {method!r}")


def _certificate_json(cert) -> dict:
    blocks = []
    for b in cert.blocks:
        blocks.append(
            {
                "first_strand": b.first_strand,
                "strands": b.strands,
                "word": b.word.text(),
                "alternating": b.flags.alternating,
                "reduced": b.flags.reduced,
                "non_split": b.flags.non_split,
                "leading": (
                    "positive"
                    if b.flags.positive_leading
                    else "negative" if b.flags.negative_leading else None
                ),
                "certified": b.certified,
            }
        )
    return {
        "certified": cert.certified,
        "braid_index": cert.braid_index,
        "lower_bound": cert.lower_bound,
        "E": cert.E,
        "e": cert.e,
        "blocks": blocks,
    }


def _analyze_json(word: BraidWord) -> dict:
    perm = permutation(word)
    flags = classify(word)
    profile = gap_profile(word)
    cert = braid_index_certificate(word)
    poly = homfly(word, DESCENDING)
    E, e, span = poly.a_degrees()
    alex = alexander(word)
    crossing_kinds = classify_crossings(ResolvedDiagram.all_kept(word))
    return {
        "word": word.text(),
        "strands": word.strands,
        "crossings": len(word),
        "writhe": writhe(word),
        "permutation": {
            "cycles": perm.cycle_text(),
            "return_order": list(perm.return_order),
            "pivots": list(perm.pivots),
        },
        "crossing_kinds": list(crossing_kinds),
        "gap_profile": [
            {
                "gap": t.gap,
                "positive": t.positive,
                "negative": t.negative,
                "positions": list(t.positions),
            }
            for t in profile.gaps
        ],
        "classification": {
            "alternating": flags.alternating,
            "positive_leading": flags.positive_leading,
            "negative_leading": flags.negative_leading,
            "reduced": flags.reduced,
            "non_split": flags.non_split,
        },
        "homfly": {"descending": poly.to_json_terms()},
        "homfly_text": poly.to_text(),
        "degrees": {"E": E, "e": e, "span": span},
        "mfw_lower_bound": span // 2 + 1,
        "braid_index": _certificate_json(cert),
        "alexander": {
            "delta": alex.delta.to_json_terms(),
            "text": alex.delta.to_text(),
            "leading_coeff": alex.leading_coeff,
            "leading_is_unit": alex.leading_is_unit,
        },
    }


def _parse_word_or_exit(text: str, strands: Optional[int]) -> BraidWord:
    try:
        return parse_braid(text, strands)
    except BraidParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _cert_line(cert_json: dict) -> str:
    if cert_json["certified"]:
        return f"braid index = {cert_json['braid_index']} (certified)"
    return f"braid index >= {cert_json['lower_bound']} (MFW bound only)"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_compute(args) -> int:
    word = _parse_word_or_exit(args.word, args.strands)
    methods = list(_METHODS) if args.method == "all" else [args.method]
    values = {m: _compute_method(word, m) for m in methods}
    reference = values[methods[0]]
    agree = all(v == reference for v in values.values())
    if args.json:
        doc = {
            "word": word.text(),
            "strands": word.strands,
            "writhe": writhe(word),
            "method": args.method,
            "homfly": {m: v.to_json_terms() for m, v in values.items()},
            "homfly_text": {m: v.to_text() for m, v in values.items()},
            "methods_agree": agree,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"word: {word.text() or '(empty)'}")
        print(f"strands: {word.strands}  writhe: {writhe(word)}")
        for m in methods:
            print(f"P ({m}): {values[m].to_text()}")
        if args.method == "all":
            print("all methods agree" if agree else "METHOD DISAGREEMENT")
    if not agree:
        print(f"error: methods disagree on {word.text()!r}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_analyze(args) -> int:
    word = _parse_word_or_exit(args.word, args.strands)
    doc = _analyze_json(word)
    if args.json:
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print(f"word: {word.text() or '(empty)'}")
    print(f"strands: {word.strands}  crossings: {len(word)}  writhe: {doc['writhe']}")
    print(f"permutation: {doc['permutation']['cycles']}")
    print(f"return order: {' '.join(str(x) for x in doc['permutation']['return_order'])}")
    for t in doc["gap_profile"]:
        print(f"gap {t['gap']}: {t['positive']} positive, {t['negative']} negative")
    active = [k for k, v in doc["classification"].items() if v]
    print("classification: " + (", ".join(active) if active else "none"))
    print(f"P: {doc['homfly_text']}")
    d = doc["degrees"]
    print(f"a-degrees: E={d['E']} e={d['e']} span={d['span']}")
    print(f"MFW lower bound: {doc['mfw_lower_bound']}")
    print(_cert_line(doc["braid_index"]))
    print(
        f"alexander: {doc['alexander']['text']} "
        f"(leading {doc['alexander']['leading_coeff']})"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    word = _parse_word_or_exit(args.word, args.strands)
    moves = (
        ["markov", "mirror", "skein", "bijection"]
        if args.moves == "all"
        else [args.moves]
    )
    failures = []
    for move in moves:
        if move == "markov":
            message = check_markov(word, seed=args.seed, count=args.samples)
        elif move == "mirror":
            message = check_mirror(word)
        elif move == "skein":
            message = check_skein(word)
        else:
            message = check_bijection(word)
        if args.inject_failure:
            message = f"{move}: injected failure (test hook)"
        if message is None:
            print(f"{move}: pass")
        else:
            print(f"{move}: FAIL  {message}")
            failures.append(message)
    if failures:
        print(f"error: {len(failures)} verification failure(s)", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _batch_line(item: tuple[int, str]) -> tuple[int, int, str]:
    """Worker for one batch line; returns (line number, status, output)."""
    lineno, line = item
    body = line.split("#", 1)[0].strip()
    strands = None
    if ";" in body:
        head, body = body.split(";", 1)
        try:
            strands = int(head.strip())
        except ValueError:
            return lineno, EXIT_INPUT, json.dumps(
                {"line": lineno, "error": f"bad strand prefix {head.strip()!r}"}
            )
    try:
        word = parse_braid(body, strands)
    except BraidParseError as exc:
        return lineno, EXIT_INPUT, json.dumps({"line": lineno, "error": str(exc)})
    try:
        doc = _analyze_json(word)
    except SubstitutionError as exc:
        return lineno, EXIT_VERIFY, json.dumps({"line": lineno, "error": str(exc)})
    doc = {"line": lineno, **doc}
    return lineno, EXIT_OK, json.dumps(doc)


def cmd_batch(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    items = [
        (lineno, line)
        for lineno, line in enumerate(lines, start=1)
        if line.split("#", 1)[0].strip()
    ]
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_line, items))
    else:
        results = [_batch_line(item) for item in items]
    worst = EXIT_OK
    for _, status, output in sorted(results):
        if args.json:
            print(output)
        else:
            doc = json.loads(output)
            if "error" in doc:
                print(f"line {doc['line']}: error: {doc['error']}")
            else:
                print(
                    f"line {doc['line']}: {doc['word'] or '(empty)'} "
                    f"[n={doc['strands']}] P = {doc['homfly_text']}"
                )
        worst = max(worst, status)
    return worst


def cmd_selftest(args) -> int:
    results = run_selftest(
        max_crossings=args.max_crossings,
        max_strands=args.max_strands,
        samples=args.samples,
        seed=args.seed,
    )
    failed = False
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.name}: {status} ({r.checked} checked, {r.elapsed:.2f}s)")
        for message in r.failures:
            failed = True
            print(f"  {message}")
    if args.inject_failure:
        print("injected failure (test hook)")
        failed = True
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidpoly",
        description=(
            "Exact HOMFLY polynomials of closed braids, with braid-index "
            "certificates and Alexander polynomials.  Braid words are "
            "whitespace/comma-separated nonzero integers: k > 0 is the "
            "positive generator at gap k, k < 0 its inverse."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_word(p):
        p.add_argument("word", help="braid word, e.g. '1 1 1' or '-1 3 -2 -4 -4 -4 1 -3'")
        p.add_argument("--strands", type=int, default=None, help="strand count override")
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("compute", help="HOMFLY polynomial of a closed braid")
    add_word(p)
    p.add_argument(
        "--method",
        choices=_METHODS + ("all",),
        default="descending",
        help="which expansion to evaluate; 'all' cross-checks every method",
    )
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("analyze", help="full diagram and invariant report")
    add_word(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run property checks against one word")
    add_word(p)
    p.add_argument(
        "--moves",
        choices=("markov", "mirror", "skein", "bijection", "all"),
        default="all",
    )
    p.add_argument("--samples", type=int, default=20, help="variants for markov checks")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="one report per input line")
    p.add_argument("file", help="input file: one '[n;]word' per line, # comments")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("--json", action="store_true", help="newline-delimited JSON")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("selftest", help="run the full property suites")
    p.add_argument("--max-crossings", type=int, default=8)
    p.add_argument("--max-strands", type=int, default=4)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
