"""Score one parsed sentence and read its branch trace.

The fixture is the negated noun phrase "no es una comida muy buena":
the intensifier lifts buena from 2 to 2.5, the nominal head collects
that value, and the negation then shifts it by 4 down to -1.5.
"""

from pathlib import Path

from branchpol import load_lexicons, map_to_class, parse_conllu_file, score_sentence

ROOT = Path(__file__).resolve().parent.parent

lexicons = load_lexicons(
    ROOT / "samples/sentiment_es.tsv",
    ROOT / "samples/intensifiers_es.tsv",
    ROOT / "samples/negators_es.txt",
)

(sentence,) = parse_conllu_file(ROOT / "fixtures/no_es_una_comida_muy_buena.conllu")
result = score_sentence(sentence, lexicons)

print("text:   ", " ".join(token.form for token in sentence))
for trace in result.traces:
    print(
        f"branch {trace.head_id}: base={trace.base_score:+.2f} "
        f"boost={trace.boost_sum:.2f} negated={trace.negated} -> {trace.result:+.2f}"
    )
print("score:  ", result.score)
print("class:  ", map_to_class(result.score))
