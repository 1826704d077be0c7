"""Command line front end.

    qparity expand j1 --terms 10
    qparity verify thm1 --terms 1000
    qparity oddlist c1 8 -1 --limit 26
    qparity export-claims --out claims.json

Exit codes: 0 success, 1 a claim failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import __version__
from .catalog import CATALOG_NAMES, PATTERN_NAMES, SeriesCache, UnknownSeriesError, build, is_known
from .claims import (
    ClaimError,
    CoefficientStream,
    claims_to_document,
    load_manifest,
    odd_index_list,
    verify_claims,
)
from .registry import builtin_claims, select
from .series import coeff

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_TERMS = 200


class UsageError(Exception):
    pass


def series_name(name: str) -> str:
    """Accept ``cN`` as shorthand for the level-N hauptmodul ``jN``."""
    if name.startswith("c") and name[1:].isdigit():
        name = "j" + name[1:]
    if not is_known(name):
        raise UsageError(
            f"unknown series {name!r}; known: {', '.join(CATALOG_NAMES)}, {', '.join(PATTERN_NAMES)}"
        )
    return name


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _modulus(text: str) -> int:
    v = _positive(text)
    if v < 2:
        raise argparse.ArgumentTypeError("modulus must be >= 2")
    return v


def _csv(rows: List[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------


def cmd_expand(args) -> tuple:
    name = series_name(args.name)
    f = build(name, args.terms, args.mod)
    lo = f.order if args.mod is None else min(f.order, 0)
    rows = [(n, coeff(f, n)) for n in range(min(lo, args.terms), args.terms)]
    if args.format == "json":
        doc = {
            "series": name,
            "terms": args.terms,
            "modulus": args.mod,
            "coefficients": [{"n": n, "coefficient": c} for n, c in rows],
        }
        return _dump(doc), EXIT_OK
    if args.format == "csv":
        return _csv([["n", "coefficient"]] + [list(r) for r in rows]), EXIT_OK
    return "".join(f"{n}\t{c}\n" for n, c in rows), EXIT_OK


def _failure_text(f) -> str:
    where = f" [{f.stream}]" if f.stream else ""
    return f"n={f.index}: lhs={f.lhs} rhs={f.rhs}{where}"


def cmd_verify(args) -> tuple:
    if args.manifest:
        claims = load_manifest(args.manifest)
        claims = select(args.selection or "all", claims)
        selection = args.selection or "all"
    else:
        if not args.selection:
            raise UsageError("verify needs a suite, a claim id, or --manifest")
        claims = select(args.selection)
        selection = args.selection
    reports = verify_claims(claims, args.terms, SeriesCache(), args.all_failures)
    ok = all(r.verified for r in reports)
    for r in reports:
        print(f"{r.claim.id}\t{r.elapsed:.3f}s", file=sys.stderr)

    if args.format == "json":
        doc = {
            "selection": selection,
            "terms": args.terms,
            "all_verified": ok,
            "reports": [r.to_dict(args.all_failures) for r in reports],
        }
        out = _dump(doc)
    elif args.format == "csv":
        rows = [["id", "status", "range", "first_failure"]]
        for r in reports:
            ff = r.first_failure
            rows.append([
                r.claim.id,
                r.status,
                f"{r.checked[0]}..{r.checked[1]}",
                "" if ff is None else f"{ff.index}:{ff.lhs}:{ff.rhs}",
            ])
        out = _csv(rows)
    else:
        lines = []
        for r in reports:
            tag = "PASS" if r.verified else "FAIL"
            lines.append(f"[{tag}] {r.claim.id:<9} n={r.checked[0]}..{r.checked[1]:<7} {r.claim.statement()}")
            if r.claim.source:
                lines.append(f"       {r.claim.source}")
            if r.first_failure is not None:
                failures = r.failures if args.all_failures else [r.first_failure]
                for f in failures:
                    lines.append(f"       failure at {_failure_text(f)}")
        passed = sum(r.verified for r in reports)
        lines.append(f"{passed}/{len(reports)} claims verified")
        out = "\n".join(lines) + "\n"
    return out, EXIT_OK if ok else EXIT_FAIL


def cmd_oddlist(args) -> tuple:
    name = series_name(args.series)
    stream = CoefficientStream.of(name, args.stride, args.offset, args.start)
    odd = odd_index_list(stream, args.limit)
    checked = max(0, args.limit - stream.start + 1)
    density = len(odd) / checked if checked else 0.0
    if args.format == "json":
        doc = {
            "stream": stream.to_dict(),
            "label": stream.label(),
            "limit": args.limit,
            "odd_indices": odd,
            "count": len(odd),
            "checked": checked,
            "density": round(density, 6),
        }
        return _dump(doc), EXIT_OK
    if args.format == "csv":
        return _csv([["n"]] + [[n] for n in odd]), EXIT_OK
    text = (
        f"{stream.label()} odd for n in [{stream.start}, {args.limit}]:\n"
        f"{', '.join(map(str, odd))}\n"
        f"count: {len(odd)} of {checked}\n"
        f"odd density: {density:.6f}\n"
    )
    return text, EXIT_OK


def cmd_export(args) -> tuple:
    return _dump(claims_to_document(builtin_claims())), EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="qparity", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="print coefficients of a catalog series")
    p.add_argument("name")
    p.add_argument("--terms", type=_positive, default=DEFAULT_TERMS,
                   help="print exponents below this bound (default %(default)s)")
    p.add_argument("--mod", type=_modulus, default=None, metavar="M")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", parents=[common], help="verify a claim suite or a single claim")
    p.add_argument("selection", nargs="?",
                   help="thm1, thm2, thm3, prop, identities, counts, all, or a claim id")
    p.add_argument("--terms", type=_positive, default=DEFAULT_TERMS)
    p.add_argument("--manifest", metavar="FILE", help="verify claims from a JSON manifest")
    p.add_argument("--all-failures", action="store_true", help="list every failing index")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oddlist", parents=[common], help="indices n where a stream is odd")
    p.add_argument("series")
    p.add_argument("stride", type=_positive)
    p.add_argument("offset", type=int)
    p.add_argument("--limit", type=_positive, default=30)
    p.add_argument("--start", type=int, default=None)
    p.set_defaults(func=cmd_oddlist)

    p = sub.add_parser("export-claims", parents=[common], help="write the built-in claims as a manifest")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        out, code = args.func(args)
    except (UsageError, ClaimError, UnknownSeriesError, FileNotFoundError) as exc:
        print(f"qparity: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
