"""Where tree structure beats token proximity.

"no ! es excelente !" carries an isolated "no" followed by plain praise.
The branch scorer keeps the negation inside its own sentence; the flat
proximity window sees "no" three tokens before "excelente" and flips it.
The corpus comparison at the end quantifies the same effect.
"""

from pathlib import Path

from branchpol import (
    Extreme,
    classify_threshold,
    compare_report,
    evaluate,
    load_dataset,
    load_lexicons,
    parse_conllu_file,
    predict_compositional,
    predict_proximity,
    score_proximity,
    score_sentence,
)

ROOT = Path(__file__).resolve().parent.parent

lexicons = load_lexicons(
    ROOT / "samples/sentiment_es.tsv",
    ROOT / "samples/intensifiers_es.tsv",
    ROOT / "samples/negators_es.txt",
)

sentences = parse_conllu_file(ROOT / "fixtures/no_es_excelente_split.conllu")
print("tree scorer, per sentence: ", [score_sentence(s, lexicons).score for s in sentences])

flat = [token for sentence in sentences for token in sentence.tokens]
proportions = score_proximity(flat, lexicons, window=3)
print(f"window scorer on the flat stream: pos={proportions.pos:.3f} neg={proportions.neg:.3f}")
print("window verdict at tau=0.7:", classify_threshold(proportions, 0.7).value)

records = load_dataset(ROOT / "fixtures/corpus/manifest.csv")
reports = [
    evaluate(records, lambda r: predict_compositional(r, lexicons, Extreme()), "compositional"),
    *(
        evaluate(records, lambda r, t=tau: predict_proximity(r, lexicons, 3, t), f"proximity(tau={tau})")
        for tau in (0.7, 0.8, 1.0)
    ),
]
print()
print(compare_report(reports).split("[")[0].rstrip())
