"""CLI for the corpus converter.

Exit codes: 0 success, 2 input problems, 3 backend/model unavailable.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .backends import ModelUnavailable, make_backend
from .convert import MissingColumn, convert_corpus

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MODEL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchpol-bridge",
        description="Convert raw review CSVs into CoNLL-U files plus a scoring manifest.",
    )
    parser.add_argument("csv_in", type=Path, help="input CSV (review_id,title,body,polarity)")
    parser.add_argument("out_dir", type=Path, help="output directory for CoNLL-U + manifest")
    parser.add_argument("--language", default="es", help="language code (default: es)")
    parser.add_argument("--backend", choices=["rules", "stanza"], default="rules",
                        help="parsing backend (default: rules)")
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        backend = make_backend(args.backend, args.language)
    except (ModelUnavailable, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_MODEL
    try:
        manifest = convert_corpus(args.csv_in, args.out_dir, args.language, backend)
    except (MissingColumn, FileNotFoundError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    print(manifest)
    return EXIT_OK


def entrypoint() -> None:
    raise SystemExit(main())
