"""Branch-wise bottom-up sentence scoring.

A branch is a head token together with its direct children. Branches are
evaluated from the deepest upward: each branch's base value (the head's
own lexicon score plus whatever its child subtrees propagated) is first
scaled by its intensifier children via (1 + sum of boosts), and only
afterwards shifted by 4 against its sign if a negator child is present.
The value of the virtual-root branch is the sentence score.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conllu import Sentence, branch_order, build_head_child_map
from .lexicon import Intensifier, LexiconSet, Negator, Sentiment, classify_token

NEGATION_SHIFT = 4.0


def preprocess(text: str) -> str:
    """Unicode-aware lowercasing; the only normalization applied to raw text."""
    return text.lower()


def _sign(value: float) -> int:
    return (value > 0) - (value < 0)


def branch_polarity(base: float, boost: float, negated: bool) -> float:
    """Combine one branch: intensify first, negate after.

    Returns base * (1 + boost); when negated, the intensified value is
    then shifted by 4 toward the opposite sign (a zero value stays zero).
    Requires 1 + boost > 0 so downtoners can weaken but never erase or
    flip a score.
    """
    if 1.0 + boost <= 0:
        raise ValueError(f"total boost must stay above -1, got {boost}")
    value = base * (1.0 + boost)
    if negated:
        value = value + _sign(value) * -NEGATION_SHIFT
    return value


@dataclass(frozen=True)
class BranchTrace:
    """Evaluation record of one branch, for explainability output."""

    head_id: int
    base_score: float
    boost_sum: float
    negated: bool
    result: float

    def as_dict(self) -> dict:
        return {
            "head_id": self.head_id,
            "base_score": self.base_score,
            "boost_sum": self.boost_sum,
            "negated": self.negated,
            "result": self.result,
        }


@dataclass(frozen=True)
class SentenceScore:
    """Final sentence polarity plus the per-branch trace that produced it."""

    score: float
    traces: tuple[BranchTrace, ...]


def score_sentence(sentence: Sentence, lexicons: LexiconSet) -> SentenceScore:
    """Score one sentence by evaluating its branches bottom-up.

    Within a branch, sentiment children contribute their score (leaf) or
    their already-computed branch value (inner head) additively to the
    base; intensifier children contribute only their boost and negator
    children only the negation flag - a token consumed as intensifier or
    negator contributes nothing else. The virtual-root branch evaluates
    last and its value is the sentence score, which passes the root
    token's value through unchanged in the ordinary case.
    """
    head_child_map = build_head_child_map(sentence)
    order = branch_order(head_child_map)
    roles = {token.id: classify_token(token, lexicons) for token in sentence.tokens}

    results: dict[int, float] = {}
    traces: list[BranchTrace] = []
    for head in order:
        own = roles.get(head)
        base = own.score if isinstance(own, Sentiment) else 0.0
        boost = 0.0
        negated = False
        for child in head_child_map.children(head):
            role = roles[child]
            if isinstance(role, Negator):
                negated = True
            elif isinstance(role, Intensifier):
                boost += role.boost
            elif child in head_child_map:
                base += results[child]
            elif isinstance(role, Sentiment):
                base += role.score
        value = branch_polarity(base, boost, negated)
        results[head] = value
        traces.append(BranchTrace(head, base, boost, negated, value))

    return SentenceScore(score=results[0], traces=tuple(traces))
