"""Shared test utilities: random trees, toy lexicons, and the recursive oracle."""

from __future__ import annotations

import random
from pathlib import Path

from hypothesis import strategies as st

from branchpol.conllu import Sentence, Token
from branchpol.lexicon import Intensifier, LexiconSet, Negator, Sentiment, classify_token

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def make_sentence(heads, lemmas=None, feats=None):
    """Build a Sentence from a head list; token i (1-based) gets heads[i-1]."""
    n = len(heads)
    lemmas = lemmas or [f"w{i}" for i in range(1, n + 1)]
    feats = feats or [{} for _ in range(n)]
    tokens = [
        Token(id=i, form=lemmas[i - 1], lemma=lemmas[i - 1], upos="X",
              feats=feats[i - 1], head=heads[i - 1])
        for i in range(1, n + 1)
    ]
    return Sentence(tuple(tokens))


def random_heads(rng: random.Random, n: int) -> list[int]:
    """Random rooted tree over tokens 1..n (not necessarily projective)."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    heads = [0] * n
    for k, node in enumerate(order):
        heads[node - 1] = 0 if k == 0 else rng.choice(order[:k])
    return heads


def random_role_lexicons(rng: random.Random, n: int) -> LexiconSet:
    """Assign each lemma w1..wn a random role via an in-memory LexiconSet.

    Boosts are kept nonnegative so per-branch boost sums always satisfy
    the 1 + boost > 0 precondition regardless of tree shape.
    """
    sentiment = {}
    intensifiers = {}
    negators = set()
    for i in range(1, n + 1):
        lemma = f"w{i}"
        roll = rng.random()
        if roll < 0.35:
            score = rng.uniform(0.5, 5.0) * rng.choice([-1, 1])
            sentiment[lemma] = round(score, 3)
        elif roll < 0.55:
            intensifiers[lemma] = round(rng.uniform(0.05, 1.0), 3)
        elif roll < 0.7:
            negators.add(lemma)
    return LexiconSet(sentiment=sentiment, intensifiers=intensifiers, negators=frozenset(negators))


def recursive_score(sentence: Sentence, lexicons: LexiconSet) -> float:
    """Independent oracle: direct top-down recursion over raw head links.

    Implements the same combination rule as the pipeline but without the
    head-child map or the branch ordering machinery.
    """
    children: dict[int, list[Token]] = {}
    for token in sentence.tokens:
        children.setdefault(token.head, []).append(token)
    by_id = {token.id: token for token in sentence.tokens}

    def evaluate(head_id: int) -> float:
        own = by_id.get(head_id)
        role = classify_token(own, lexicons) if own is not None else None
        base = role.score if isinstance(role, Sentiment) else 0.0
        boost = 0.0
        negated = False
        for child in children.get(head_id, ()):
            child_role = classify_token(child, lexicons)
            if isinstance(child_role, Negator):
                negated = True
            elif isinstance(child_role, Intensifier):
                boost += child_role.boost
            elif child.id in children:
                base += evaluate(child.id)
            elif isinstance(child_role, Sentiment):
                base += child_role.score
        value = base * (1.0 + boost)
        if negated:
            value = value + ((value > 0) - (value < 0)) * -4.0
        return value

    return evaluate(0)


@st.composite
def sentences(draw, max_tokens: int = 10) -> Sentence:
    """Hypothesis strategy for structurally valid sentences."""
    n = draw(st.integers(min_value=1, max_value=max_tokens))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return make_sentence(random_heads(random.Random(seed), n))
