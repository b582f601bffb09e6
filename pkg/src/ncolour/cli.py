"""Command-line entry point: ``ncolour <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.  JSON output is a single document with sorted keys in which every
number is a decimal string.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Optional, Sequence, TextIO

from . import __version__
from .bijection import ClassLabel, trace, verify_bijection
from .core import iter_compositions, enumerate_self_inverse, enumerate_self_inverse_m
from .formulas import count_A, count_compositions, count_compositions_m, count_self_inverse
from .genfunc import IntPolynomial, RationalSeries, SeriesError, expand, gf_compositions_m, gf_of
from .identities import IDENTITIES, sweep
from .lattice import enumerate_paths, path_triangle
from .sequences import SequenceId, seq_window

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_LIMIT = 24


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: error: {message}")


def _dump_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _dump_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _s(x: int) -> str:
    return str(x)


def _guard(nu: int, args: argparse.Namespace) -> None:
    if nu > args.limit and not args.force:
        raise UsageError(
            f"refusing to enumerate weight {nu} (limit {args.limit}); pass --force to override"
        )


def _composition_stream(args: argparse.Namespace):
    if args.self_inverse:
        if args.parts is not None:
            return enumerate_self_inverse_m(args.nu, args.parts)
        return enumerate_self_inverse(args.nu)
    return iter_compositions(args.nu, args.parts)


def _formula_count(args: argparse.Namespace) -> int:
    nu, m = args.nu, args.parts
    if args.self_inverse:
        if m is None:
            return count_self_inverse(nu)
        return count_A(m, nu) if nu >= 1 else 0
    if m is None:
        return count_compositions(nu)
    return count_compositions_m(nu, m)


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    _guard(args.nu, args)
    comps = list(_composition_stream(args))
    if args.format == "json":
        out.write(_dump_json({
            "nu": _s(args.nu),
            "parts": None if args.parts is None else _s(args.parts),
            "self_inverse": args.self_inverse,
            "count": _s(len(comps)),
            "compositions": [[[_s(p.size), _s(p.colour)] for p in c] for c in comps],
        }))
    elif args.format == "csv":
        out.write(_dump_csv(["index", "parts", "composition"],
                            [(i, len(c), str(c)) for i, c in enumerate(comps)]))
    else:
        for c in comps:
            out.write(f"{c}\n")
    return EXIT_OK


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    value = _formula_count(args)
    enumerated = None
    if args.cross_check:
        _guard(args.nu, args)
        enumerated = sum(1 for _ in _composition_stream(args))
    status = EXIT_OK if enumerated is None or enumerated == value else EXIT_FAIL
    if args.format == "json":
        doc = {"nu": _s(args.nu), "parts": None if args.parts is None else _s(args.parts),
               "self_inverse": args.self_inverse, "count": _s(value)}
        if enumerated is not None:
            doc["enumerated"] = _s(enumerated)
            doc["agree"] = enumerated == value
        out.write(_dump_json(doc))
    elif args.format == "csv":
        header = ["nu", "parts", "self_inverse", "count"]
        row = [args.nu, "" if args.parts is None else args.parts, int(args.self_inverse), value]
        if enumerated is not None:
            header.append("enumerated")
            row.append(enumerated)
        out.write(_dump_csv(header, [row]))
    else:
        out.write(f"{value}\n")
        if enumerated is not None:
            verdict = "agree" if status == EXIT_OK else "DISAGREE"
            out.write(f"cross-check: formula {value}, enumeration {enumerated}: {verdict}\n")
    return status


def cmd_seq(args: argparse.Namespace, out: TextIO) -> int:
    ident = SequenceId.parse(args.id)
    start = ident.first_index if args.start is None else args.start
    window = seq_window(ident, start, args.len)
    rows = window.indexed()
    if args.format == "json":
        out.write(_dump_json({"id": ident.value, "start": _s(start),
                              "values": [_s(v) for v in window.values]}))
    elif args.format == "csv":
        out.write(_dump_csv(["n", "value"], rows))
    else:
        for _, v in rows:
            out.write(f"{v}\n")
    return EXIT_OK


def _series_from_args(args: argparse.Namespace) -> RationalSeries:
    chosen = sum(x is not None for x in (args.id, args.parts, args.num))
    if chosen != 1:
        raise UsageError("gf: give exactly one of ID, --parts M, or --num/--den")
    if args.id is not None:
        return gf_of(SequenceId.parse(args.id))
    if args.parts is not None:
        return gf_compositions_m(args.parts)
    if args.den is None:
        raise UsageError("gf: --num requires --den")
    return RationalSeries(IntPolynomial.parse(args.num), IntPolynomial.parse(args.den))


def cmd_gf(args: argparse.Namespace, out: TextIO) -> int:
    series = _series_from_args(args)
    coeffs = expand(series, args.terms)
    if args.format == "json":
        out.write(_dump_json({
            "numerator": [_s(c) for c in series.numerator.coefficients],
            "denominator": [_s(c) for c in series.denominator.coefficients],
            "coefficients": [_s(c) for c in coeffs],
        }))
    elif args.format == "csv":
        out.write(_dump_csv(["n", "coefficient"], list(enumerate(coeffs))))
    else:
        out.write(f"# {series}\n")
        width = len(str(len(coeffs) - 1))
        for n, c in enumerate(coeffs):
            out.write(f"{n:>{width}}  {c}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    labels = list(IDENTITIES) if args.identity == "all" else [args.identity]
    if args.identity != "all" and args.identity not in IDENTITIES:
        raise UsageError(f"verify: unknown identity {args.identity!r}; "
                         f"expected one of {', '.join(IDENTITIES)}, all")
    fmt = "json" if args.json else args.format
    results = {}
    for label in labels:
        if label == "T6.1i" and args.exact_division:
            from .identities import identity_i
            results[label] = [identity_i(i, exact_division=True) for i in range(0, args.max + 1)]
        else:
            results[label] = sweep(label, args.max)
    all_hold = all(r.holds for reps in results.values() for r in reps)
    if fmt == "json":
        out.write(_dump_json({
            "all_hold": all_hold,
            "identities": {
                label: [{"index": _s(r.index), "lhs": _s(r.lhs), "rhs": _s(r.rhs), "holds": r.holds}
                        for r in reps]
                for label, reps in results.items()
            },
        }))
    elif fmt == "csv":
        out.write(_dump_csv(["identity", "index", "lhs", "rhs", "holds"],
                            [(r.identity, r.index, r.lhs, r.rhs, int(r.holds))
                             for reps in results.values() for r in reps]))
    else:
        for label, reps in results.items():
            if args.verbose:
                for r in reps:
                    mark = "ok" if r.holds else "FAIL"
                    out.write(f"{label} [{r.index}] lhs={r.lhs} rhs={r.rhs} {mark}\n")
            else:
                for r in reps:
                    if not r.holds:
                        out.write(f"{label} [{r.index}] lhs={r.lhs} rhs={r.rhs} FAIL\n")
            good = sum(r.holds for r in reps)
            out.write(f"{label}: {good}/{len(reps)} hold\n")
    return EXIT_OK if all_hold else EXIT_FAIL


def cmd_paths(args: argparse.Namespace, out: TextIO) -> int:
    if args.enumerate:
        ks = range(args.nu + 1) if args.k is None else [args.k]
        paths = [(k, p) for k in ks for p in enumerate_paths(args.nu, k, strict=args.strict_endpoints)]
        if args.format == "json":
            out.write(_dump_json({"nu": _s(args.nu),
                                  "paths": [{"k": _s(k), "steps": p} for k, p in paths]}))
        elif args.format == "csv":
            out.write(_dump_csv(["nu", "k", "steps"], [(args.nu, k, p) for k, p in paths]))
        else:
            for _, p in paths:
                out.write(f"{p}\n")
        return EXIT_OK

    triangle = [path_triangle(nu, strict=args.strict_endpoints) for nu in range(args.nu + 1)]
    if args.format == "json":
        out.write(_dump_json({"rows": [
            {"nu": _s(nu), "counts": [_s(r.count) for r in rows], "total": _s(sum(r.count for r in rows))}
            for nu, rows in enumerate(triangle)
        ]}))
    elif args.format == "csv":
        out.write(_dump_csv(["nu", "k", "count"],
                            [(r.nu, r.k, r.count) for rows in triangle for r in rows]))
    else:
        width = max(len(str(r.count)) for rows in triangle for r in rows)
        total_w = max(len(str(sum(r.count for r in rows))) for rows in triangle)
        nu_w = max(2, len(str(args.nu)))
        for nu, rows in enumerate(triangle):
            cells = " ".join(f"{r.count:>{width}}" for r in rows)
            pad = " " * ((width + 1) * (args.nu - nu))
            out.write(f"{nu:>{nu_w}} | {cells}{pad} | {sum(r.count for r in rows):>{total_w}}\n")
    return EXIT_OK


def cmd_bijection(args: argparse.Namespace, out: TextIO) -> int:
    if args.n < 2:
        raise UsageError(f"bijection: --n must be >= 2, got {args.n}")
    summary = verify_bijection(args.n)
    steps = trace(args.n) if args.trace else []
    status = EXIT_OK if summary.ok else EXIT_FAIL
    if args.format == "json":
        doc = {
            "n": _s(args.n),
            "target_count": _s(summary.target_count),
            "class_counts": {lab.value: _s(v) for lab, v in summary.class_counts.items()},
            "failures": [{"item": a, "problem": b} for a, b in summary.failures],
            "ok": summary.ok,
        }
        if args.trace:
            doc["trace"] = [{"origin": s.origin.value, "source": str(s.composition),
                             "class": lab.value, "image": str(img)} for s, lab, img in steps]
        out.write(_dump_json(doc))
    elif args.format == "csv":
        if args.trace:
            out.write(_dump_csv(["origin", "source", "class", "image"],
                                [(s.origin.value, str(s.composition), lab.value, str(img))
                                 for s, lab, img in steps]))
        else:
            out.write(_dump_csv(["class", "count", "target_count"],
                                [(lab.value, v, summary.target_count)
                                 for lab, v in summary.class_counts.items()]))
    else:
        for s, lab, img in steps:
            out.write(f"{s} -> class {lab.value} -> {img}\n")
        out.write(f"n={args.n}: a(n-1) = {summary.target_count}\n")
        for lab in ClassLabel:
            out.write(f"class {lab.value}: {summary.class_counts[lab]}\n")
        for item, problem in summary.failures:
            out.write(f"FAIL {item}: {problem}\n")
        out.write(f"failures: {len(summary.failures)}\n")
    return status


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    guard = _Parser(add_help=False)
    guard.add_argument("--limit", type=_nonneg, default=DEFAULT_LIMIT,
                       help=f"largest weight enumerated without --force (default {DEFAULT_LIMIT})")
    guard.add_argument("--force", action="store_true")

    parser = _Parser(prog="ncolour", description="n-colour compositions and self-inverse compositions")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[fmt, guard], help="list compositions of NU")
    p.add_argument("nu", type=_nonneg)
    p.add_argument("--self-inverse", action="store_true")
    p.add_argument("--parts", type=_positive, metavar="M")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[fmt, guard], help="count compositions of NU by formula")
    p.add_argument("nu", type=_nonneg)
    p.add_argument("--self-inverse", action="store_true")
    p.add_argument("--parts", type=_positive, metavar="M")
    p.add_argument("--cross-check", action="store_true", help="also count by enumeration")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("seq", parents=[fmt], help="window of sequence A, B, C or D")
    p.add_argument("id", metavar="ID")
    p.add_argument("--start", type=_nonneg)
    p.add_argument("--len", type=_positive, default=10)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("gf", parents=[fmt], help="expand a generating function")
    p.add_argument("id", metavar="ID", nargs="?")
    p.add_argument("--parts", type=_positive, metavar="M", help="q^M/(1-q)^(2M)")
    p.add_argument("--num", metavar="COEFFS", help="ascending, comma separated")
    p.add_argument("--den", metavar="COEFFS", help="ascending, comma separated")
    p.add_argument("--terms", type=_positive, default=10)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", parents=[fmt], help="sweep an identity over indices")
    p.add_argument("identity", metavar="IDENTITY", help=f"{', '.join(IDENTITIES)} or all")
    p.add_argument("--max", type=_nonneg, required=True)
    p.add_argument("--json", action="store_true", help="same as --format json")
    p.add_argument("--exact-division", action="store_true",
                   help="evaluate T6.1i weighted binomials by exact division")
    p.add_argument("--verbose", "-v", action="store_true", help="print every report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paths", parents=[fmt], help="restricted lattice path counts")
    p.add_argument("nu", type=_nonneg)
    p.add_argument("--enumerate", action="store_true", help="print step strings for NU")
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--strict-endpoints", action="store_true",
                   help="forbid a vertical first or last step (negative control)")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("bijection", parents=[fmt], help="check the three-class bijection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_bijection)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (ValueError, SeriesError) as exc:
        err.write(f"ncolour: error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
