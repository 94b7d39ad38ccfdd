"""Small deterministic Spanish analyzer emitting CoNLL-U.

A lexicalized tagger plus a handful of attachment heuristics, meant as
an offline stand-in for a full UD toolkit so corpus conversion stays
testable without model downloads. Coverage is the review domain:
copular clauses, bare noun phrases, simple verb clauses.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

SENT_END = {".", "!", "?", "…"}

_TOKEN = re.compile(r"\w+|[^\w\s]", re.UNICODE)

DETERMINERS = {
    "el": "Definite=Def|Gender=Masc|Number=Sing|PronType=Art",
    "la": "Definite=Def|Gender=Fem|Number=Sing|PronType=Art",
    "los": "Definite=Def|Gender=Masc|Number=Plur|PronType=Art",
    "las": "Definite=Def|Gender=Fem|Number=Plur|PronType=Art",
    "un": "Definite=Ind|Gender=Masc|Number=Sing|PronType=Art",
    "una": "Definite=Ind|Gender=Fem|Number=Sing|PronType=Art",
    "unos": "Definite=Ind|Gender=Masc|Number=Plur|PronType=Art",
    "unas": "Definite=Ind|Gender=Fem|Number=Plur|PronType=Art",
    "mi": "Number=Sing|Person=1|Poss=Yes|PronType=Prs",
    "tu": "Number=Sing|Person=2|Poss=Yes|PronType=Prs",
    "su": "Number=Sing|Person=3|Poss=Yes|PronType=Prs",
    "este": "Gender=Masc|Number=Sing|PronType=Dem",
    "esta": "Gender=Fem|Number=Sing|PronType=Dem",
    "ese": "Gender=Masc|Number=Sing|PronType=Dem",
    "esa": "Gender=Fem|Number=Sing|PronType=Dem",
}

# determiner lemma follows the UD-Spanish convention (la -> el, una -> uno)
DETERMINER_LEMMAS = {"la": "el", "los": "el", "las": "el", "una": "uno", "unos": "uno", "unas": "uno"}

COPULAS = {
    "es": ("ser", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"),
    "era": ("ser", "Mood=Ind|Number=Sing|Person=3|Tense=Imp|VerbForm=Fin"),
    "fue": ("ser", "Mood=Ind|Number=Sing|Person=3|Tense=Past|VerbForm=Fin"),
    "son": ("ser", "Mood=Ind|Number=Plur|Person=3|Tense=Pres|VerbForm=Fin"),
    "eran": ("ser", "Mood=Ind|Number=Plur|Person=3|Tense=Imp|VerbForm=Fin"),
    "fueron": ("ser", "Mood=Ind|Number=Plur|Person=3|Tense=Past|VerbForm=Fin"),
    "está": ("estar", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"),
    "están": ("estar", "Mood=Ind|Number=Plur|Person=3|Tense=Pres|VerbForm=Fin"),
    "estaba": ("estar", "Mood=Ind|Number=Sing|Person=3|Tense=Imp|VerbForm=Fin"),
}

NEGATORS = {"no", "nunca", "jamás", "tampoco", "ni"}

DEGREE_ADVERBS = {"muy", "tan", "bastante", "extremadamente", "totalmente", "algo", "poco", "ligeramente"}

PLAIN_ADVERBS = {"pronto", "aquí", "ya", "también", "bien"}

ADPOSITIONS = {"de", "en", "con", "sin", "por", "para", "a"}

# form -> (lemma, feats)
ADJECTIVES = {
    "excelente": ("excelente", "Number=Sing"),
    "excelentes": ("excelente", "Number=Plur"),
    "bueno": ("bueno", "Gender=Masc|Number=Sing"),
    "buena": ("bueno", "Gender=Fem|Number=Sing"),
    "buenos": ("bueno", "Gender=Masc|Number=Plur"),
    "buenas": ("bueno", "Gender=Fem|Number=Plur"),
    "malo": ("malo", "Gender=Masc|Number=Sing"),
    "mala": ("malo", "Gender=Fem|Number=Sing"),
    "feo": ("feo", "Gender=Masc|Number=Sing"),
    "fea": ("feo", "Gender=Fem|Number=Sing"),
    "limpio": ("limpio", "Gender=Masc|Number=Sing"),
    "limpia": ("limpio", "Gender=Fem|Number=Sing"),
    "sucio": ("sucio", "Gender=Masc|Number=Sing"),
    "sucia": ("sucio", "Gender=Fem|Number=Sing"),
    "rico": ("rico", "Gender=Masc|Number=Sing"),
    "rica": ("rico", "Gender=Fem|Number=Sing"),
    "pésimo": ("pésimo", "Gender=Masc|Number=Sing"),
    "pésima": ("pésimo", "Gender=Fem|Number=Sing"),
    "perfecto": ("perfecto", "Gender=Masc|Number=Sing"),
    "perfecta": ("perfecto", "Gender=Fem|Number=Sing"),
    "fantástico": ("fantástico", "Gender=Masc|Number=Sing"),
    "fantástica": ("fantástico", "Gender=Fem|Number=Sing"),
    "barato": ("barato", "Gender=Masc|Number=Sing"),
    "barata": ("barato", "Gender=Fem|Number=Sing"),
    "caro": ("caro", "Gender=Masc|Number=Sing"),
    "cara": ("caro", "Gender=Fem|Number=Sing"),
    "corta": ("corto", "Gender=Fem|Number=Sing"),
    "corto": ("corto", "Gender=Masc|Number=Sing"),
    "mediocre": ("mediocre", "Number=Sing"),
    "horrible": ("horrible", "Number=Sing"),
    "terrible": ("terrible", "Number=Sing"),
    "increíble": ("increíble", "Number=Sing"),
    "agradable": ("agradable", "Number=Sing"),
    "decente": ("decente", "Number=Sing"),
    "recomendable": ("recomendable", "Number=Sing"),
    "encantador": ("encantador", "Gender=Masc|Number=Sing"),
    "encantadora": ("encantador", "Gender=Fem|Number=Sing"),
    "delicioso": ("delicioso", "Gender=Masc|Number=Sing"),
    "deliciosa": ("delicioso", "Gender=Fem|Number=Sing"),
}

VERBS = {
    "volveremos": ("volver", "Mood=Ind|Number=Plur|Person=1|Tense=Fut|VerbForm=Fin"),
    "volvimos": ("volver", "Mood=Ind|Number=Plur|Person=1|Tense=Past|VerbForm=Fin"),
    "recomiendo": ("recomendar", "Mood=Ind|Number=Sing|Person=1|Tense=Pres|VerbForm=Fin"),
}

NOUN_GENDER = {
    "comida": "Fem", "habitación": "Fem", "visita": "Fem", "opinión": "Fem",
    "ubicación": "Fem", "cena": "Fem", "playa": "Fem", "vista": "Fem",
    "hotel": "Masc", "servicio": "Masc", "restaurante": "Masc", "baño": "Masc",
    "desayuno": "Masc", "personal": "Masc", "centro": "Masc", "lugar": "Masc",
    "precio": "Masc", "enero": "Masc",
}


class ParseFailure(ValueError):
    """The analyzer cannot produce a tree for this text."""


@dataclass
class _Word:
    form: str
    lemma: str
    upos: str
    feats: str
    kind: str  # DET COP NEG DEG ADV ADP ADJ VERB NOUN NUM PUNCT


def tokenize(text: str) -> list[str]:
    for ch in text:
        if unicodedata.category(ch).startswith("C") and ch not in "\t\n\r":
            raise ParseFailure(f"control character {ch!r} in input")
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ParseFailure("no tokens found")
    return tokens


def _tag(form: str) -> _Word:
    if not form.isalnum() and len(form) == 1 and not form.isspace():
        return _Word(form, form, "PUNCT", "_", "PUNCT")
    if form in DETERMINERS:
        return _Word(form, DETERMINER_LEMMAS.get(form, form), "DET", DETERMINERS[form], "DET")
    if form in COPULAS:
        lemma, feats = COPULAS[form]
        return _Word(form, lemma, "AUX", feats, "COP")
    if form in NEGATORS:
        return _Word(form, form, "ADV", "Polarity=Neg", "NEG")
    if form in DEGREE_ADVERBS:
        return _Word(form, form, "ADV", "_", "DEG")
    if form in PLAIN_ADVERBS:
        return _Word(form, form, "ADV", "_", "ADV")
    if form in ADPOSITIONS:
        return _Word(form, form, "ADP", "_", "ADP")
    if form in ADJECTIVES:
        lemma, feats = ADJECTIVES[form]
        return _Word(form, lemma, "ADJ", feats, "ADJ")
    if form in VERBS:
        lemma, feats = VERBS[form]
        return _Word(form, lemma, "VERB", feats, "VERB")
    if form.isdigit():
        return _Word(form, form, "NUM", "NumType=Card", "NUM")
    gender = NOUN_GENDER.get(form)
    feats = f"Gender={gender}|Number=Sing" if gender else "_"
    return _Word(form, form, "NOUN", feats, "NOUN")


def _split_sentences(tokens: list[str]) -> list[list[str]]:
    sentences: list[list[str]] = []
    current: list[str] = []
    for i, token in enumerate(tokens):
        current.append(token)
        if token in SENT_END and (i + 1 == len(tokens) or tokens[i + 1] not in SENT_END):
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def _pick_root(words: list[_Word]) -> int:
    copulas = [i for i, w in enumerate(words) if w.kind == "COP"]
    if copulas:
        first = copulas[0]
        for j in range(first + 1, len(words)):
            if words[j].upos == "ADJ":
                return j
            if words[j].upos == "NOUN" and words[first].lemma == "ser":
                return j
    for i, w in enumerate(words):
        if w.upos == "VERB":
            return i
    for i, w in enumerate(words):
        if w.kind == "COP":  # copula with no predicate: promote it
            return i
    for i, w in enumerate(words):
        if w.upos == "NOUN":
            return i
    for i, w in enumerate(words):
        if w.upos == "ADJ":
            return i
    for i, w in enumerate(words):
        if w.upos != "PUNCT":
            return i
    return 0


def _nearest(indices: list[int], i: int) -> int | None:
    """Closest index to i; ties prefer the following side."""
    if not indices:
        return None
    return min(indices, key=lambda j: (abs(j - i), j < i))


def _attach(words: list[_Word]) -> list[tuple[int, str]]:
    """Assign (head, deprel) per word; heads are 0-based, -1 means root."""
    root = _pick_root(words)
    nouns = [i for i, w in enumerate(words) if w.upos == "NOUN"]
    adjectives = [i for i, w in enumerate(words) if w.upos == "ADJ"]
    adverbs = [i for i, w in enumerate(words) if w.upos == "ADV"]
    out: list[tuple[int, str]] = []
    for i, word in enumerate(words):
        if i == root:
            out.append((-1, "root"))
            continue
        if word.kind in ("DET", "ADP"):
            following = [j for j in nouns if j > i]
            if following:
                head = following[0]
            else:
                nearest = _nearest(nouns, i)
                head = root if nearest is None else nearest
            out.append((head, "det" if word.kind == "DET" else "case"))
        elif word.kind == "DEG":
            following = [j for j in adjectives if j > i]
            if following:
                target = following[0]
            else:
                later_adverbs = [j for j in adverbs if j > i]
                target = later_adverbs[0] if later_adverbs else root
            out.append((target, "advmod"))
        elif word.kind in ("NEG", "ADV"):
            out.append((root, "advmod"))
        elif word.kind == "COP":
            out.append((root, "cop"))
        elif word.upos == "PUNCT":
            out.append((root, "punct"))
        elif word.upos == "ADJ":
            head = _nearest(nouns, i)
            out.append((root if head is None else head, "amod"))
        elif word.upos == "NUM":
            following = [j for j in nouns if j > i]
            out.append((following[0], "nummod") if following else (root, "nummod"))
        elif word.upos == "NOUN":
            adp_before = [j for j, w in enumerate(words) if w.kind == "ADP" and j < i]
            oblique = adp_before and not any(j in nouns for j in range(adp_before[-1] + 1, i))
            if oblique:
                deprel = "obl" if words[root].upos == "VERB" else "nmod"
                out.append((root, deprel))
            elif words[root].upos in ("ADJ", "VERB", "AUX"):
                out.append((root, "nsubj"))
            else:
                out.append((root, "conj"))
        else:
            out.append((root, "dep"))
    return out


def analyze(text: str) -> str:
    """Tokenize, tag, and attach lowercased text; return CoNLL-U."""
    tokens = tokenize(text.lower())
    blocks: list[str] = []
    for k, sentence_tokens in enumerate(_split_sentences(tokens), start=1):
        words = [_tag(form) for form in sentence_tokens]
        attachments = _attach(words)
        lines = [f"# sent_id = s{k}", "# text = " + " ".join(sentence_tokens)]
        for i, (word, (head, deprel)) in enumerate(zip(words, attachments), start=1):
            head_id = 0 if head == -1 else head + 1
            lines.append(
                "\t".join(
                    [str(i), word.form, word.lemma, word.upos, "_", word.feats,
                     str(head_id), deprel, "_", "_"]
                )
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n\n"
