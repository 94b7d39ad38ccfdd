"""Acceptance suite: one test per shipped guarantee, each printing a verdict line.

Run with `pytest -s tests/test_acceptance.py` to see the PASS/FAIL lines.
"""

import random
from pathlib import Path

import pytest

from branchpol.aggregation import Extreme, Mean, aggregate, map_to_class
from branchpol.baseline import ThresholdVerdict, classify_threshold, score_proximity
from branchpol.conllu import parse_conllu, parse_conllu_file, serialize_conllu
from branchpol.evaluation import evaluate, load_dataset, predict_compositional, predict_proximity
from branchpol.lexicon import load_lexicons
from branchpol.scoring import branch_polarity, score_sentence
from helpers import (
    FIXTURES,
    SAMPLES,
    make_sentence,
    random_heads,
    random_role_lexicons,
    recursive_score,
)

TOLERANCE = 1e-12


@pytest.fixture(scope="module")
def lexicons():
    return load_lexicons(
        SAMPLES / "sentiment_es.tsv",
        SAMPLES / "intensifiers_es.tsv",
        SAMPLES / "negators_es.txt",
    )


def check(name, condition):
    print(f"{'PASS' if condition else 'FAIL'}: {name}")
    assert condition, name


def test_worked_example_negated_copula(lexicons):
    (sentence,) = parse_conllu_file(FIXTURES / "no_es_excelente.conllu")
    score = score_sentence(sentence, lexicons).score
    check("worked example 1: 'no es excelente' scores 1.0", abs(score - 1.0) < TOLERANCE)
    check("worked example 1: maps to class 3", map_to_class(score) == 3)


def test_worked_example_intensified_negation(lexicons):
    (sentence,) = parse_conllu_file(FIXTURES / "no_es_una_comida_muy_buena.conllu")
    score = score_sentence(sentence, lexicons).score
    check(
        "worked example 2: 'no es una comida muy buena' scores -1.5",
        abs(score - (-1.5)) < TOLERANCE,
    )
    check("worked example 2: maps to class 2", map_to_class(score) == 2)


def test_aggregation_review_example():
    scores = [-1, 2, -1, 1, -4]
    check("aggregation: mean of review example is -0.6", aggregate(scores, Mean()) == -0.6)
    check("aggregation: extreme of review example is -4", aggregate(scores, Extreme()) == -4)


def test_class_mapping_boundaries():
    points = [-5, -3, -1, 1, 3, 5, -3.0001, 1.0001]
    expected = [1, 1, 2, 3, 4, 5, 1, 4]
    got = [map_to_class(point) for point in points]
    check(f"class mapping: {points} -> {expected}", got == expected)


def test_intensify_before_negate():
    value = branch_polarity(5, 0.25, True)
    check("order of operations: (5, 0.25, negated) -> 2.25", value == 2.25)
    check("order of operations: never 1.25", value != 1.25)
    rng = random.Random(20230901)
    diverged = True
    for _ in range(500):
        a = rng.uniform(0.01, 5.0) * rng.choice([-1, 1])
        b = rng.uniform(1e-6, 1.0)
        intensify_then_negate = branch_polarity(a, b, True)
        negate_then_intensify = branch_polarity(a, 0, True) * (1 + b)
        diverged &= intensify_then_negate != negate_then_intensify
    check("order of operations: randomized orderings always differ", diverged)


def test_oracle_equivalence_1000_random_trees():
    rng = random.Random(42)
    agreed = True
    for _ in range(1000):
        n = rng.randint(1, 8)
        sentence = make_sentence(random_heads(rng, n))
        role_lexicons = random_role_lexicons(rng, n)
        pipeline = score_sentence(sentence, role_lexicons).score
        oracle = recursive_score(sentence, role_lexicons)
        agreed &= pipeline == oracle
    check("oracle equivalence: 1000 random trees match the recursive evaluator", agreed)


def test_negation_scope_divergence(lexicons):
    sentences = parse_conllu_file(FIXTURES / "no_es_excelente_split.conllu")
    scores = [score_sentence(sentence, lexicons).score for sentence in sentences]
    check("scope: tree scorer yields [0, 5] across the sentence boundary", scores == [0.0, 5.0])
    review = aggregate(scores, Extreme())
    check("scope: review class is 5", map_to_class(review) == 5)

    flat = [token for sentence in sentences for token in sentence.tokens]
    proportions = score_proximity(flat, lexicons, window=3)
    check("scope: flat window flips the polarity", proportions.neg > proportions.pos)
    verdict = classify_threshold(proportions, 0.7)
    check(
        "scope: the two systems diverge on the same input",
        verdict != ThresholdVerdict.POSITIVE and map_to_class(review) == 5,
    )


def test_round_trip_on_all_shipped_fixtures():
    fixtures = sorted(Path(FIXTURES).rglob("*.conllu"))
    check("round trip: fixture files present", len(fixtures) >= 30)
    identical = True
    for path in fixtures:
        first = parse_conllu_file(path)
        second = parse_conllu(serialize_conllu(first))
        identical &= second == first
    check(f"round trip: parse-serialize-parse is identity on {len(fixtures)} fixtures", identical)


def test_synthetic_corpus_comparison(lexicons):
    records = load_dataset(FIXTURES / "corpus" / "manifest.csv")
    check("comparison: corpus has 20 reviews", len(records) == 20)
    compositional = evaluate(
        records,
        lambda record: predict_compositional(record, lexicons, Extreme()),
        "compositional(extreme)",
    )
    check("comparison: compositional accuracy is 1.00", compositional.accuracy == 1.0)
    for tau in (0.7, 0.8, 1.0):
        baseline = evaluate(
            records,
            lambda record: predict_proximity(record, lexicons, 3, tau),
            f"proximity(tau={tau})",
        )
        check(
            f"comparison: compositional strictly beats proximity at tau={tau} "
            f"({compositional.accuracy:.2f} > {baseline.accuracy:.2f})",
            compositional.accuracy > baseline.accuracy,
        )
