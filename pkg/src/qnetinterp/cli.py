"""Command-line entry point: ``qnet-interpret --graph G.json [--config C.json] ...``

Exit codes are a stable contract:

0  success
1  malformed JSON, unsupported input shape, or bad command-line usage
2  input violates a domain rule (unknown vertex references, ragged kets, ...)
3  a file could not be read or written
4  verification was requested and some target ket is unreachable
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .errors import InputIOError, ParseError, ValidationError
from .matcher import DEFAULT_VERTEX_CAP
from .report import OUTPUTS, output_paths, run_complete_analysis

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_UNREACHABLE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would collide with validation errors
    def error(self, message: str):
        raise UsageError(message)


def _emit_list(text: str) -> list[str]:
    items = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in items if s not in OUTPUTS]
    if bad or not items:
        raise argparse.ArgumentTypeError(f"expected a comma-separated subset of {', '.join(OUTPUTS)}; got {text!r}")
    return items


def _cap(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError("must be at least 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="qnet-interpret",
        description="Analyse a PyTheus quantum-network graph and draw it as a graph and as an optical table.",
        allow_abbrev=False,
    )
    p.add_argument("--graph", required=True, type=Path, help="graph JSON file")
    p.add_argument("--config", type=Path, help="optional network config JSON file")
    p.add_argument("--out-dir", type=Path, default=Path("."), help="output directory (default: current)")
    p.add_argument("--prefix", help="output file prefix (default: graph file stem)")
    p.add_argument(
        "--emit",
        type=_emit_list,
        action="append",
        help=f"outputs to produce, comma-separated or repeated: {', '.join(OUTPUTS)} (default: all)",
    )
    p.add_argument(
        "--matcher-cap",
        type=_cap,
        default=DEFAULT_VERTEX_CAP,
        help=f"largest vertex count for exhaustive matching enumeration (default: {DEFAULT_VERTEX_CAP})",
    )
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    emit = [item for chunk in args.emit for item in chunk] if args.emit else list(OUTPUTS)
    prefix = args.prefix or args.graph.stem
    try:
        result = run_complete_analysis(
            args.config, args.graph, prefix, args.out_dir, emit=emit, matcher_cap=args.matcher_cap
        )
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except InputIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    for w in result.warnings:
        print(f"warning: {w}", file=sys.stderr)
    written = [path for key, path in output_paths(prefix, args.out_dir).items() if key in emit]
    for path in written:
        print(f"wrote {path}", file=sys.stderr)

    ver = result.verification
    if "verify" in emit and ver is not None and not ver.all_reachable:
        print(f"error: unreachable target kets: {', '.join(ver.unreachable)}", file=sys.stderr)
        return EXIT_UNREACHABLE
    return EXIT_OK
