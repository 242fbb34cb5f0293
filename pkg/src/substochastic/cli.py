"""Command-line surface: check, decompose, verify, enumerate, sample.

Exit codes are a stable contract: 0 success/membership, 1 domain
rejection, 2 parse error, 3 I/O error.  Paths accept "-" for stdin/stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .decompose import decompose, is_extreme, verify
from .documents import (
    decomposition_document,
    format_fraction,
    matrix_document,
    parse_decomposition_document,
    parse_matrix_document,
)
from .errors import DomainError, ParseError, TooLargeError
from .matrix import (
    interior_cells,
    is_bounded_substochastic,
    is_doubly_substochastic,
    is_vertex,
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _unsigned_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _load_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _write_text(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_check(args) -> int:
    matrix, k = parse_matrix_document(_load_json(args.input))
    bounded = is_bounded_substochastic(matrix, k)
    report = {
        "doubly_substochastic": is_doubly_substochastic(matrix),
        "bounded": bounded,
        "vertex": is_vertex(matrix, k),
        "extreme": is_extreme(matrix, k) if bounded else False,
        "middle_entries": len(interior_cells(matrix, k)),
    }
    print(json.dumps(report, indent=2))
    return 0 if bounded else 1


def _cmd_decompose(args) -> int:
    matrix, k = parse_matrix_document(_load_json(args.input))
    if not is_bounded_substochastic(matrix, k):
        raise DomainError(f"input matrix is not doubly substochastic with entries in [0, 1/{k}]")
    result = decompose(matrix, k)
    document = decomposition_document(result, k)
    _write_text(json.dumps(document, indent=2) + "\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    decomposition, k = parse_decomposition_document(_load_json(args.input))
    result = verify(decomposition, k)
    if result.ok:
        print("valid")
        return 0
    print(f"invalid: {result.reason}")
    return 1


def _cmd_enumerate(args) -> int:
    vertices = oracle.enumerate_vertices(args.m, args.n, args.k)
    lines = [str(len(vertices))]
    for vertex in vertices:
        lines.append("")
        lines.extend(" ".join(format_fraction(value) for value in row) for row in vertex.rows)
    print("\n".join(lines))
    return 0


def _cmd_sample(args) -> int:
    matrix = oracle.sample_member(args.m, args.n, args.k, args.seed, args.strategy)
    document = matrix_document(matrix, args.k)
    _write_text(json.dumps(document, indent=2) + "\n", args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="substoch",
        description="Exact membership, extremality, and vertex decomposition "
        "for doubly substochastic matrices with entries capped at 1/k.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="report membership flags for a matrix document")
    check.add_argument("--input", required=True, help="matrix document path, or - for stdin")
    check.set_defaults(handler=_cmd_check)

    dec = commands.add_parser("decompose", help="write a convex-combination certificate")
    dec.add_argument("--input", required=True, help="matrix document path, or - for stdin")
    dec.add_argument("--output", default=None, help="certificate path, or - / omitted for stdout")
    dec.set_defaults(handler=_cmd_decompose)

    ver = commands.add_parser("verify", help="re-check a certificate with exact arithmetic")
    ver.add_argument("--input", required=True, help="certificate path, or - for stdin")
    ver.set_defaults(handler=_cmd_verify)

    enum = commands.add_parser("enumerate", help="list every vertex for the given m, n, k")
    enum.add_argument("--m", type=_positive_int, required=True)
    enum.add_argument("--n", type=_positive_int, required=True)
    enum.add_argument("--k", type=_positive_int, required=True)
    enum.set_defaults(handler=_cmd_enumerate)

    samp = commands.add_parser("sample", help="write a reproducible random member")
    samp.add_argument("--m", type=_positive_int, required=True)
    samp.add_argument("--n", type=_positive_int, required=True)
    samp.add_argument("--k", type=_positive_int, required=True)
    samp.add_argument("--seed", type=_unsigned_int, default=0)
    samp.add_argument("--strategy", choices=oracle.STRATEGIES, default="convex")
    samp.add_argument("--output", default=None, help="matrix document path, or - / omitted for stdout")
    samp.set_defaults(handler=_cmd_sample)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, TooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
