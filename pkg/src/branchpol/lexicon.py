"""Sentiment, intensifier, and negator lexicons plus per-token role lookup.

File formats: ``lemma<TAB>score`` rows for the sentiment and intensifier
lexicons, one lemma per line for negators. UTF-8 throughout, blank lines
and ``#`` comments ignored, entries lowercased on load.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping

from .conllu import Token

SCORE_MIN = -5.0
SCORE_MAX = 5.0


class LexiconError(ValueError):
    """Problem in a lexicon file or lexicon contents."""

    def __init__(self, message: str, path: str | Path | None = None, line_no: int | None = None):
        self.path = path
        self.line_no = line_no
        if path is not None and line_no is not None:
            message = f"{path}:{line_no}: {message}"
        elif path is not None:
            message = f"{path}: {message}"
        super().__init__(message)


class ScoreOutOfRange(LexiconError):
    """A sentiment score or intensifier boost violates its allowed range."""


class DuplicateLemma(LexiconError):
    """The same lemma appears twice within one file."""


class RoleConflict(LexiconError):
    """A lemma is listed both as a sentiment word and as a negator."""


class MalformedRow(LexiconError):
    """A row does not follow the expected layout."""


@dataclass(frozen=True)
class Sentiment:
    """Prior polarity carried by a token, in [-5, +5], never 0."""

    score: float


@dataclass(frozen=True)
class Intensifier:
    """Multiplicative booster applied as (1 + boost); negative boosts are downtoners."""

    boost: float


@dataclass(frozen=True)
class Negator:
    """Polarity-shifting token such as Spanish "no"."""


@dataclass(frozen=True)
class Neutral:
    """Token with no entry in any lexicon."""


TokenRole = Sentiment | Intensifier | Negator | Neutral


@dataclass(frozen=True)
class LexiconSet:
    """The three lookups driving token classification, immutable after load."""

    sentiment: Mapping[str, float]
    intensifiers: Mapping[str, float]
    negators: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sentiment", dict(self.sentiment))
        object.__setattr__(self, "intensifiers", dict(self.intensifiers))
        object.__setattr__(self, "negators", frozenset(self.negators))
        for lemma, score in self.sentiment.items():
            if not (SCORE_MIN <= score <= SCORE_MAX) or score == 0:
                raise ScoreOutOfRange(
                    f"sentiment score for {lemma!r} must be in [-5, 5] and nonzero, got {score}"
                )
        for lemma, boost in self.intensifiers.items():
            if not boost > -1:
                raise ScoreOutOfRange(f"boost for {lemma!r} must be > -1, got {boost}")
        overlap = set(self.sentiment) & self.negators
        if overlap:
            raise RoleConflict(f"lemmas in both sentiment and negator lexicons: {sorted(overlap)}")


def _rows(path: str | Path) -> Iterator[tuple[int, str]]:
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        yield line_no, raw


def _read_scored(path: str | Path, problem_for) -> dict[str, float]:
    entries: dict[str, float] = {}
    for line_no, line in _rows(path):
        cols = line.split("\t")
        if len(cols) != 2:
            raise MalformedRow("expected 'lemma<TAB>score'", path, line_no)
        lemma = cols[0].strip().lower()
        if not lemma or any(ch.isspace() for ch in lemma):
            raise MalformedRow(f"lemma must be a single token, got {cols[0]!r}", path, line_no)
        try:
            value = float(cols[1])
        except ValueError:
            raise MalformedRow(f"bad score {cols[1]!r}", path, line_no) from None
        if lemma in entries:
            raise DuplicateLemma(f"duplicate lemma {lemma!r}", path, line_no)
        problem = problem_for(value)
        if problem is not None:
            raise ScoreOutOfRange(f"{problem} for {lemma!r}: {value}", path, line_no)
        entries[lemma] = value
    return entries


def _read_negators(path: str | Path) -> frozenset[str]:
    entries: set[str] = set()
    for line_no, line in _rows(path):
        lemma = line.strip().lower()
        if any(ch.isspace() for ch in lemma) or "\t" in lemma:
            raise MalformedRow(f"negator must be a single token, got {line!r}", path, line_no)
        if lemma in entries:
            raise DuplicateLemma(f"duplicate lemma {lemma!r}", path, line_no)
        entries.add(lemma)
    return frozenset(entries)


def load_lexicons(
    sentiment_path: str | Path,
    intensifier_path: str | Path,
    negator_path: str | Path,
) -> LexiconSet:
    """Load and validate the three lexicon files into one LexiconSet."""
    sentiment = _read_scored(
        sentiment_path,
        lambda v: None if SCORE_MIN <= v <= SCORE_MAX and v != 0 else "score outside [-5, 5] or zero",
    )
    intensifiers = _read_scored(
        intensifier_path,
        lambda v: None if v > -1 else "boost must be > -1",
    )
    negators = _read_negators(negator_path)
    overlap = set(sentiment) & negators
    if overlap:
        raise RoleConflict(
            f"lemmas in both sentiment and negator lexicons: {sorted(overlap)}", negator_path
        )
    return LexiconSet(sentiment=sentiment, intensifiers=intensifiers, negators=negators)


def classify_token(token: Token, lexicons: LexiconSet) -> TokenRole:
    """Assign exactly one role to a token.

    Precedence is Negator > Intensifier > Sentiment > Neutral, so a lemma
    listed both as intensifier and sentiment word always acts as the
    intensifier. Negators are detected from the Polarity=Neg feature or
    the negator list; sentiment lookup tries the lemma first and falls
    back to the lowercased surface form.
    """
    lemma = token.lemma.lower()
    if token.feats.get("Polarity") == "Neg" or lemma in lexicons.negators:
        return Negator()
    if lemma in lexicons.intensifiers:
        return Intensifier(lexicons.intensifiers[lemma])
    score = lexicons.sentiment.get(lemma)
    if score is None:
        score = lexicons.sentiment.get(token.form.lower())
    if score is not None:
        return Sentiment(score)
    return Neutral()
