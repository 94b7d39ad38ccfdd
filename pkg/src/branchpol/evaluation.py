"""Dataset loading, accuracy evaluation, and system comparison reports.

Datasets are manifest CSVs with columns review_id, title_conllu_path,
body_conllu_path, polarity; the paths point at pre-parsed CoNLL-U files
and are resolved relative to the manifest. Lines starting with ``#`` are
treated as comments so converters can record provenance in the manifest.
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .aggregation import AggregationMetric, aggregate, map_to_class, select_input
from .baseline import ThresholdVerdict, classify_threshold, score_proximity
from .conllu import ConlluError, Sentence, parse_conllu_file
from .lexicon import LexiconSet
from .scoring import score_sentence

logger = logging.getLogger(__name__)

N_CLASSES = 5

MANIFEST_COLUMNS = ("review_id", "title_conllu_path", "body_conllu_path", "polarity")

VERDICT_CLASS = {
    ThresholdVerdict.POSITIVE: 5,
    ThresholdVerdict.NEGATIVE: 1,
    ThresholdVerdict.INCONCLUSIVE: 3,
}


class MissingColumn(ValueError):
    """The manifest lacks one of the required columns."""


class BadPolarity(ValueError):
    """A gold polarity label is outside 1..5."""


class EmptyDataset(ValueError):
    """evaluate() needs at least one record."""


@dataclass(frozen=True)
class ReviewRecord:
    """One labeled review: pre-parsed title and body plus the gold class."""

    review_id: str
    title_sentences: tuple[Sentence, ...]
    body_sentences: tuple[Sentence, ...]
    gold: int

    def __post_init__(self) -> None:
        if self.gold not in range(1, N_CLASSES + 1):
            raise BadPolarity(f"gold polarity must be 1..5, got {self.gold}")
        if not self.title_sentences and not self.body_sentences:
            raise ValueError(f"review {self.review_id!r} has neither title nor body")


@dataclass(frozen=True)
class EvalReport:
    """Accuracy and 5x5 confusion matrix (rows = gold, columns = predicted)."""

    system_name: str
    accuracy: float
    confusion: tuple[tuple[int, ...], ...]
    per_class_support: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "system": self.system_name,
            "accuracy": self.accuracy,
            "confusion": [list(row) for row in self.confusion],
            "support": list(self.per_class_support),
        }


def load_dataset(manifest_path: str | Path) -> list[ReviewRecord]:
    """Load a manifest CSV into records, parsing the referenced CoNLL-U files.

    A referenced file that is missing raises FileNotFoundError; a file
    that exists but fails CoNLL-U validation causes the record to be
    skipped with a warning. Empty path cells mean the review has no
    title (or no body).
    """
    manifest_path = Path(manifest_path)
    base = manifest_path.parent
    lines = [
        line
        for line in manifest_path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    reader = csv.DictReader(lines)
    header = reader.fieldnames or []
    missing = [column for column in MANIFEST_COLUMNS if column not in header]
    if missing:
        raise MissingColumn(f"manifest {manifest_path} lacks columns: {missing}")

    def read_sentences(cell: str) -> tuple[Sentence, ...]:
        if not cell.strip():
            return ()
        path = base / cell.strip()
        if not path.exists():
            raise FileNotFoundError(f"referenced CoNLL-U file not found: {path}")
        return tuple(parse_conllu_file(path))

    records: list[ReviewRecord] = []
    skipped = 0
    for row in reader:
        review_id = row["review_id"].strip()
        try:
            polarity = int(row["polarity"])
        except (TypeError, ValueError):
            raise BadPolarity(f"review {review_id!r}: bad polarity {row['polarity']!r}") from None
        if polarity not in range(1, N_CLASSES + 1):
            raise BadPolarity(f"review {review_id!r}: polarity {polarity} outside 1..5")
        try:
            title = read_sentences(row["title_conllu_path"])
            body = read_sentences(row["body_conllu_path"])
        except ConlluError as err:
            logger.warning("skipping review %r: %s", review_id, err)
            skipped += 1
            continue
        if not title and not body:
            logger.warning("skipping review %r: neither title nor body", review_id)
            skipped += 1
            continue
        records.append(ReviewRecord(review_id, title, body, polarity))
    if skipped:
        logger.warning("skipped %d of %d manifest rows", skipped, skipped + len(records))
    return records


def predict_compositional(
    record: ReviewRecord, lexicons: LexiconSet, metric: AggregationMetric
) -> int:
    """Tree-based prediction: select input, score sentences, aggregate, map."""
    sentences = select_input(record.title_sentences, record.body_sentences, lexicons)
    scores = [score_sentence(sentence, lexicons).score for sentence in sentences]
    return map_to_class(aggregate(scores, metric))


def predict_proximity(
    record: ReviewRecord, lexicons: LexiconSet, window: int, tau: float
) -> int:
    """Window-based prediction on the same selected input, flattened.

    The token stream intentionally crosses sentence boundaries; verdicts
    map to the extreme classes (positive -> 5, negative -> 1, otherwise 3).
    """
    sentences = select_input(record.title_sentences, record.body_sentences, lexicons)
    tokens = [token for sentence in sentences for token in sentence.tokens]
    verdict = classify_threshold(score_proximity(tokens, lexicons, window), tau)
    return VERDICT_CLASS[verdict]


def filter_binary(records: Sequence[ReviewRecord]) -> list[ReviewRecord]:
    """Keep only strongly polar records (gold 1 or 5)."""
    return [record for record in records if record.gold in (1, N_CLASSES)]


def evaluate(
    records: Sequence[ReviewRecord],
    predict: Callable[[ReviewRecord], int],
    system_name: str,
) -> EvalReport:
    """Run a predictor over records and tally accuracy plus confusion counts."""
    if not records:
        raise EmptyDataset("no records to evaluate")
    confusion = [[0] * N_CLASSES for _ in range(N_CLASSES)]
    for record in records:
        predicted = predict(record)
        confusion[record.gold - 1][predicted - 1] += 1
    correct = sum(confusion[i][i] for i in range(N_CLASSES))
    support = tuple(sum(row) for row in confusion)
    return EvalReport(
        system_name=system_name,
        accuracy=correct / len(records),
        confusion=tuple(tuple(row) for row in confusion),
        per_class_support=support,
    )


def compare_report(reports: Sequence[EvalReport]) -> str:
    """Render reports as an aligned text table plus a JSON dump.

    Rows are sorted by accuracy descending, ties broken by system name,
    so identical inputs always produce byte-identical output.
    """
    if not reports:
        raise EmptyDataset("no reports to compare")
    ordered = sorted(reports, key=lambda r: (-r.accuracy, r.system_name))
    name_width = max(len("system"), max(len(r.system_name) for r in ordered))
    lines = [f"{'system':<{name_width}}  accuracy"]
    lines.append("-" * (name_width + 10))
    for report in ordered:
        lines.append(f"{report.system_name:<{name_width}}  {report.accuracy:.4f}")
    table = "\n".join(lines)
    dump = json.dumps([report.as_dict() for report in ordered], indent=2)
    return f"{table}\n{dump}\n"
