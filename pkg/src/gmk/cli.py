"""Command-line interface.

Exit codes follow one contract everywhere: 0 for success or a positive
verdict, 1 for a negative verdict, 2 for usage or input errors.  Machine
output goes to stdout, diagnostics to stderr; streams are JSON lines so
they can be piped and truncated.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bitmatrix import BitMatrix
from .braids import braid_record
from .errors import GmkError
from .gauss import interlacement_matrix, parse_gauss_code, smooth_chord, to_chord_diagram
from .meanders import (
    enumerate_meander_matrices,
    is_meander_matrix,
    meander_matrix_report,
    oracle_enumerate_meanders,
    encode_meander,
    reconstruct_meander,
)
from .realizability import (
    audit_disagreements,
    matrix_conditions,
    oracle_realizable,
    smoothing_realizable,
)
from .svg import RenderSpec, render_chord_diagram, render_meander


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmk",
        description="Gauss diagram realizability and closed meander construction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a Gauss code is realizable")
    p.add_argument("code")
    p.add_argument(
        "--method", choices=("smoothing", "oracle", "both"), default="smoothing"
    )
    p.add_argument("--strict", action="store_true",
                   help="reject diagrams containing chords nothing crosses")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser(
        "audit", help="compare the smoothing criterion against the genus oracle"
    )
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("smooth", help="smooth one chord of a Gauss code")
    p.add_argument("code")
    p.add_argument("chord")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser(
        "matrix", help="interlacement matrix and its parity conditions"
    )
    p.add_argument("code")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("braid", help="inversion set and canonical braid word")
    p.add_argument("permutation", help="comma-separated images, e.g. 4,2,6,1,5,3")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("is-meander-matrix", help="test a matrix JSON file")
    p.add_argument("file", help="path to {\"size\": k, \"rows\": [[...]]} or -")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("meanders", help="enumerate meander matrices")
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--oracle", action="store_true",
                   help="use the direct visitation search instead of the tableau")
    p.add_argument("--prefix", default=None,
                   help="comma-separated forced visitation prefix, e.g. 5,2,3")
    p.add_argument("--canonical", action="store_true",
                   help="emit one representative per reverse-reflect orbit")

    p = sub.add_parser("reconstruct", help="rebuild the meander a matrix determines")
    p.add_argument("file", help="path to a matrix JSON file or -")

    p = sub.add_parser("render", help="draw a diagram or meander as SVG")
    p.add_argument("kind", choices=("chord", "meander"))
    p.add_argument("input", help="Gauss code (chord) or matrix JSON file (meander)")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--canvas", type=int, default=640)
    p.add_argument("--margin", type=float, default=48.0)
    p.add_argument("--stroke", type=float, default=2.0)
    p.add_argument("--samples", type=int, default=32)

    return parser


def _read_matrix(path: str) -> BitMatrix:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return BitMatrix.from_json(text)


def _cmd_check(args: argparse.Namespace) -> int:
    code = parse_gauss_code(args.code)
    reports = []
    if args.method in ("smoothing", "both"):
        reports.append(smoothing_realizable(code, strict=args.strict))
    if args.method in ("oracle", "both"):
        reports.append(oracle_realizable(code))
    if args.json:
        print(json.dumps({"code": str(code), "reports": [r.to_json() for r in reports]}))
    else:
        for report in reports:
            verdict = "realizable" if report.realizable else "not-realizable"
            extra = ""
            if report.witness is not None:
                extra = f" (witness: {report.witness})"
            if report.genus is not None:
                extra = f" (genus {report.genus})"
            print(f"{verdict}{extra}")
    if len(reports) == 2 and reports[0].realizable != reports[1].realizable:
        print("warning: methods disagree; trusting the oracle", file=sys.stderr)
        return 0 if reports[1].realizable else 1
    return 0 if reports[0].realizable else 1


def _cmd_audit(args: argparse.Namespace) -> int:
    found = 0
    for record in audit_disagreements(args.max_n, args.min_n):
        found += 1
        if args.json:
            print(json.dumps(record))
        else:
            print(
                f"{record['code']}: smoothing={record['smoothing']} "
                f"oracle={record['oracle']}"
            )
    print(
        f"audit over 2 <= n <= {args.max_n}: {found} disagreement(s)",
        file=sys.stderr,
    )
    return 0 if found == 0 else 1


def _cmd_smooth(args: argparse.Namespace) -> int:
    diagram = to_chord_diagram(parse_gauss_code(args.code))
    result = smooth_chord(diagram, args.chord).code
    if args.json:
        print(result.to_json())
    else:
        print(str(result))
    return 0


def _cmd_matrix(args: argparse.Namespace) -> int:
    matrix = interlacement_matrix(parse_gauss_code(args.code))
    report = matrix_conditions(matrix)
    if args.json:
        print(
            json.dumps(
                {
                    "size": matrix.size,
                    "rows": matrix.to_lists(),
                    "passes": report.passes,
                    "violations": [
                        {"condition": tag, "rows": list(rows)}
                        for tag, rows in report.violations
                    ],
                }
            )
        )
    else:
        print(matrix)
        if report.passes:
            print("parity conditions: pass")
        else:
            for tag, rows in report.violations:
                print(f"violated: {tag} at rows {rows}")
    return 0 if report.passes else 1


def _cmd_braid(args: argparse.Namespace) -> int:
    images = tuple(int(x) for x in args.permutation.replace(",", " ").split())
    record = braid_record(images)
    if args.json:
        print(json.dumps(record))
    else:
        print("inversions:", " ".join(f"({i},{j})" for i, j in record["inversions"]))
        print("word:", " ".join(str(g) for g in record["word"]))
    return 0


def _cmd_is_meander_matrix(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    report = meander_matrix_report(matrix)
    if args.json:
        print(
            json.dumps(
                {
                    "meander": report.passes,
                    "violations": list(report.parity_violations),
                    "full_rows": list(report.full_rows),
                }
            )
        )
    else:
        print("meander matrix" if report.passes else "not a meander matrix")
        for violation in report.parity_violations:
            print(f"violated: {violation}")
    return 0 if report.passes else 1


def _cmd_meanders(args: argparse.Namespace) -> int:
    prefix = None
    if args.prefix:
        prefix = tuple(int(x) for x in args.prefix.replace(",", " ").split())
    if args.oracle:
        if prefix or args.canonical:
            raise GmkError("--oracle does not combine with --prefix/--canonical")
        stream = (
            (encode_meander(rec), rec.visitation)
            for rec in oracle_enumerate_meanders(args.n)
        )
    else:
        stream = enumerate_meander_matrices(
            args.n, forced_prefix=prefix, canonical=args.canonical
        )
    count = 0
    for matrix, visitation in stream:
        count += 1
        if args.count_only:
            continue
        rec = reconstruct_meander(matrix)
        print(
            json.dumps(
                {
                    "matrix": matrix.to_lists(),
                    "visitation": list(visitation),
                    "upper": [list(p) for p in rec.upper],
                    "lower": [list(p) for p in rec.lower],
                }
            )
        )
    if args.count_only:
        print(count)
    return 0


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    reconstruction = reconstruct_meander(matrix)
    record = reconstruction.to_record()
    record["matrix"] = encode_meander(reconstruction).to_lists()
    print(json.dumps(record))
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    spec = RenderSpec(
        canvas=args.canvas,
        margin=args.margin,
        stroke=args.stroke,
        arc_samples=args.samples,
    )
    if args.kind == "chord":
        document = render_chord_diagram(parse_gauss_code(args.input), spec)
    else:
        document = render_meander(reconstruct_meander(_read_matrix(args.input)), spec)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "audit": _cmd_audit,
    "smooth": _cmd_smooth,
    "matrix": _cmd_matrix,
    "braid": _cmd_braid,
    "is-meander-matrix": _cmd_is_meander_matrix,
    "meanders": _cmd_meanders,
    "reconstruct": _cmd_reconstruct,
    "render": _cmd_render,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    from .errors import NotMeanderMatrix

    try:
        return _COMMANDS[args.command](args)
    except NotMeanderMatrix as exc:
        print(f"not a meander matrix: {exc}", file=sys.stderr)
        return 1
    except GmkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
