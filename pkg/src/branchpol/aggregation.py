"""Review-level aggregation of sentence scores and the 5-class mapping."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .conllu import Sentence
from .lexicon import LexiconSet, Sentiment, classify_token


class EmptyInput(ValueError):
    """aggregate() needs at least one sentence score."""


class BothEmpty(ValueError):
    """A review must have a title or a body."""


@dataclass(frozen=True)
class Mean:
    """Arithmetic mean of all sentence scores."""


@dataclass(frozen=True)
class WeightedLast:
    """Weighted mean giving the final sentence `weight` times the normal vote."""

    weight: float = 2.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.weight) and self.weight > 0):
            raise ValueError(f"weight must be finite and positive, got {self.weight}")


@dataclass(frozen=True)
class Extreme:
    """The score with the largest magnitude; ties go to the later sentence."""


AggregationMetric = Mean | WeightedLast | Extreme

METRIC_NAMES = {"mean": Mean, "weighted-last": WeightedLast, "extreme": Extreme}


def metric_from_name(name: str, last_weight: float = 2.0) -> AggregationMetric:
    """Build a metric from its CLI name; `last_weight` only affects weighted-last."""
    if name not in METRIC_NAMES:
        raise ValueError(f"unknown metric {name!r}, expected one of {sorted(METRIC_NAMES)}")
    if name == "weighted-last":
        return WeightedLast(last_weight)
    return METRIC_NAMES[name]()


def metric_name(metric: AggregationMetric) -> str:
    for name, cls in METRIC_NAMES.items():
        if isinstance(metric, cls):
            return name
    raise ValueError(f"unknown metric object {metric!r}")


def aggregate(scores: Sequence[float], metric: AggregationMetric) -> float:
    """Collapse per-sentence scores into one review score."""
    if not scores:
        raise EmptyInput("no sentence scores to aggregate")
    if len(scores) == 1:
        return float(scores[0])
    if isinstance(metric, Mean):
        return math.fsum(scores) / len(scores)
    if isinstance(metric, WeightedLast):
        weighted = math.fsum([*scores[:-1], metric.weight * scores[-1]])
        return weighted / (len(scores) - 1 + metric.weight)
    if isinstance(metric, Extreme):
        best = scores[0]
        for score in scores[1:]:
            if abs(score) >= abs(best):
                best = score
        return float(best)
    raise TypeError(f"unknown metric {metric!r}")


def map_to_class(score: float) -> int:
    """Clamp to [-5, 5] and bucket into the ordinal classes 1..5.

    Buckets are half-open at the bottom: (-5, -3] -> 1, (-3, -1] -> 2,
    (-1, 1] -> 3, (1, 3] -> 4, (3, 5] -> 5; clamping folds out-of-range
    values onto the end classes, so exactly -5 is class 1.
    """
    clamped = min(5.0, max(-5.0, score))
    if clamped <= -3:
        return 1
    if clamped <= -1:
        return 2
    if clamped <= 1:
        return 3
    if clamped <= 3:
        return 4
    return 5


def select_input(
    title_sentences: Sequence[Sentence],
    body_sentences: Sequence[Sentence],
    lexicons: LexiconSet,
) -> list[Sentence]:
    """Pick the review text to score: the title when it carries sentiment.

    Falls back to the other part when the chosen one is empty; raises
    BothEmpty when there is nothing to score at all.
    """
    if not title_sentences and not body_sentences:
        raise BothEmpty("review has neither title nor body sentences")
    title_has_sentiment = any(
        isinstance(classify_token(token, lexicons), Sentiment)
        for sentence in title_sentences
        for token in sentence.tokens
    )
    chosen, other = (
        (title_sentences, body_sentences) if title_has_sentiment else (body_sentences, title_sentences)
    )
    return list(chosen) if chosen else list(other)
