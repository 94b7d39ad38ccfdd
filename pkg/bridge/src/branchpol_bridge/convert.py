"""Corpus conversion: raw review CSV -> CoNLL-U files + dataset manifest.

Input CSV columns: review_id, title, body, polarity (1..5; title or body
may be empty, not both). Output layout: ``<out_dir>/<review_id>_title.conllu``
and ``..._body.conllu`` plus ``manifest.csv`` in the format the scoring
package's evaluation harness loads. The backend's name and version are
recorded as a ``#`` comment at the top of the manifest.

Every emitted file is checked against the scorer's CoNLL-U validator
before it is written; rows whose text cannot be parsed are logged and
skipped rather than aborting the batch.
"""

from __future__ import annotations

import csv
import logging
from pathlib import Path

from branchpol.conllu import ConlluError, parse_conllu

from .backends import RuleBackend
from .rules import ParseFailure

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("review_id", "title", "body", "polarity")
MANIFEST_HEADER = "review_id,title_conllu_path,body_conllu_path,polarity"


class MissingColumn(ValueError):
    """The input CSV lacks one of the required columns."""


def convert_corpus(
    csv_in: str | Path,
    out_dir: str | Path,
    language: str = "es",
    backend=None,
) -> Path:
    """Convert a review CSV; returns the path of the written manifest."""
    csv_in = Path(csv_in)
    out_dir = Path(out_dir)
    backend = backend if backend is not None else RuleBackend(language)

    with csv_in.open(encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        missing = [column for column in CSV_COLUMNS if column not in header]
        if missing:
            raise MissingColumn(f"{csv_in} lacks columns: {missing}")
        rows = list(reader)

    out_dir.mkdir(parents=True, exist_ok=True)
    manifest_lines = [f"# generated-by = {backend.name}", MANIFEST_HEADER]
    converted = skipped = 0
    for row in rows:
        review_id = (row["review_id"] or "").strip()
        try:
            polarity = int(row["polarity"])
        except (TypeError, ValueError):
            polarity = 0
        if not review_id or polarity not in range(1, 6):
            logger.warning("skipping row %r: bad review_id or polarity", row)
            skipped += 1
            continue
        texts = {field: (row[field] or "").strip() for field in ("title", "body")}
        if not texts["title"] and not texts["body"]:
            logger.warning("skipping review %r: title and body both empty", review_id)
            skipped += 1
            continue

        parsed: dict[str, str] = {}
        failed = False
        for field, text in texts.items():
            if not text:
                parsed[field] = ""
                continue
            try:
                conllu_text = backend.parse(text.lower())
                if not parse_conllu(conllu_text):
                    raise ParseFailure("backend produced no sentences")
            except (ParseFailure, ConlluError) as err:
                logger.warning("skipping review %r: %s failed to parse: %s", review_id, field, err)
                failed = True
                break
            parsed[field] = conllu_text
        if failed:
            skipped += 1
            continue

        cells = {}
        for field, conllu_text in parsed.items():
            if not conllu_text:
                cells[field] = ""
                continue
            name = f"{review_id}_{field}.conllu"
            (out_dir / name).write_text(conllu_text, encoding="utf-8")
            cells[field] = name
        manifest_lines.append(f"{review_id},{cells['title']},{cells['body']},{polarity}")
        converted += 1

    manifest_path = out_dir / "manifest.csv"
    manifest_path.write_text("\n".join(manifest_lines) + "\n", encoding="utf-8")
    logger.info("converted %d reviews (%d skipped) -> %s", converted, skipped, manifest_path)
    return manifest_path
