"""Proximity-window sentiment heuristic over a flat token stream.

Deliberately structure-blind: it never looks at heads or sentence
boundaries, only at how close a negator or intensifier sits in front of
a sentiment word. Damping (-0.74), distance decay (0.95), and the
S / sqrt(S^2 + 15) compound normalization follow VADER's published
conventions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .conllu import Token
from .lexicon import Intensifier, LexiconSet, Negator, Neutral, Sentiment, classify_token

NEGATION_DAMPING = -0.74
DISTANCE_DECAY = 0.95
NORMALIZATION_ALPHA = 15.0
DEFAULT_WINDOW = 3


@dataclass(frozen=True)
class ProportionScore:
    """Normalized positive/negative/neutral mass plus a compound scalar."""

    pos: float
    neg: float
    neu: float
    compound: float


class ThresholdVerdict(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INCONCLUSIVE = "inconclusive"


def score_proximity(
    tokens: Sequence[Token], lexicons: LexiconSet, window: int = DEFAULT_WINDOW
) -> ProportionScore:
    """Score a flat token stream with a backwards proximity window.

    Each sentiment token's valence is multiplied by -0.74 for every
    negator and by (1 + boost * 0.95^(d-1)) for every intensifier found
    within `window` preceding tokens (d = distance in tokens). Valences
    and the count of neutral non-punctuation tokens are then normalized
    into pos/neg/neu proportions.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    roles = [classify_token(token, lexicons) for token in tokens]

    valences: list[float] = []
    neutral_count = 0
    for i, (token, role) in enumerate(zip(tokens, roles)):
        if isinstance(role, Sentiment):
            valence = role.score
            for distance in range(1, window + 1):
                j = i - distance
                if j < 0:
                    break
                neighbor = roles[j]
                if isinstance(neighbor, Negator):
                    valence *= NEGATION_DAMPING
                elif isinstance(neighbor, Intensifier):
                    valence *= 1.0 + neighbor.boost * DISTANCE_DECAY ** (distance - 1)
            valences.append(valence)
        elif isinstance(role, Neutral) and token.upos != "PUNCT":
            neutral_count += 1

    positive_mass = math.fsum(v for v in valences if v > 0)
    negative_mass = math.fsum(-v for v in valences if v < 0)
    total = positive_mass + negative_mass + neutral_count
    if total == 0:
        return ProportionScore(pos=0.0, neg=0.0, neu=1.0, compound=0.0)
    raw_sum = math.fsum(valences)
    compound = raw_sum / math.sqrt(raw_sum * raw_sum + NORMALIZATION_ALPHA)
    return ProportionScore(
        pos=positive_mass / total,
        neg=negative_mass / total,
        neu=neutral_count / total,
        compound=compound,
    )


def classify_threshold(score: ProportionScore, tau: float) -> ThresholdVerdict:
    """Turn proportions into a verdict: a side must exceed tau to win.

    tau = 1 is the strictest setting and is satisfied only by a pure
    score (pos or neg exactly 1).
    """
    if not 0 < tau <= 1:
        raise ValueError(f"tau must be in (0, 1], got {tau}")
    if tau >= 1.0:
        positive, negative = score.pos >= 1.0, score.neg >= 1.0
    else:
        positive, negative = score.pos > tau, score.neg > tau
    if positive:
        return ThresholdVerdict.POSITIVE
    if negative:
        return ThresholdVerdict.NEGATIVE
    return ThresholdVerdict.INCONCLUSIVE
