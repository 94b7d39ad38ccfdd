"""Reading, validating, and writing CoNLL-U dependency trees.

Only basic word lines are modeled: multiword-token ranges ("4-5") and
empty nodes ("5.1") are skipped on input. Seven fields per token are
kept (id, form, lemma, upos, feats, head, deprel); the remaining
CoNLL-U columns are written back as "_".
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

WORD_COLUMNS = 10

_RANGE_OR_EMPTY_ID = re.compile(r"^\d+-\d+$|^\d+\.\d+$")
_WORD_ID = re.compile(r"^\d+$")
_SENT_ID_COMMENT = re.compile(r"^#\s*sent_id\s*=\s*(.*)$")


class ConlluError(ValueError):
    """Invalid CoNLL-U input; records where the problem was found."""

    def __init__(self, message: str, line_no: int | None = None, sent_id: str | None = None):
        self.message = message
        self.line_no = line_no
        self.sent_id = sent_id
        where = []
        if line_no is not None:
            where.append(f"line {line_no}")
        if sent_id is not None:
            where.append(f"sentence {sent_id}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class MalformedLine(ConlluError):
    """A word line does not have the expected column layout."""


class InvalidTree(ConlluError):
    """Token heads do not form a single rooted tree."""


@dataclass(frozen=True)
class Token:
    """One basic CoNLL-U word line."""

    id: int
    form: str
    lemma: str
    upos: str = "_"
    feats: dict[str, str] = field(default_factory=dict)
    head: int = 0
    deprel: str = "dep"

    def __post_init__(self) -> None:
        if self.id < 1:
            raise ValueError(f"token id must be >= 1, got {self.id}")
        if self.head < 0:
            raise ValueError(f"head must be >= 0, got {self.head}")
        if self.head == self.id:
            raise ValueError(f"token {self.id} is its own head")


def _tree_problem(ids: list[int], heads: list[int]) -> str | None:
    """Return a description of the structural defect, or None for a valid tree."""
    n = len(ids)
    if ids != list(range(1, n + 1)):
        return "token ids must be exactly 1..n in order"
    out_of_range = [i for i, h in zip(ids, heads) if h > n]
    if out_of_range:
        return f"head of token {out_of_range[0]} is out of range"
    roots = [i for i, h in zip(ids, heads) if h == 0]
    if not roots:
        return "no root token (head 0)"
    if len(roots) > 1:
        return f"multiple root tokens: {roots}"
    children: dict[int, list[int]] = {}
    for i, h in zip(ids, heads):
        children.setdefault(h, []).append(i)
    reached: set[int] = set()
    frontier = [0]
    while frontier:
        node = frontier.pop()
        for child in children.get(node, ()):
            reached.add(child)
            frontier.append(child)
    if len(reached) != n:
        stranded = min(set(ids) - reached)
        return f"cycle involving token {stranded}"
    return None


@dataclass(frozen=True)
class Sentence:
    """An ordered token list forming a single rooted dependency tree."""

    tokens: tuple[Token, ...]
    sent_id: str | None = None
    comments: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "comments", tuple(self.comments))
        problem = _tree_problem([t.id for t in self.tokens], [t.head for t in self.tokens])
        if problem is not None:
            raise InvalidTree(problem, sent_id=self.sent_id)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)


@dataclass(frozen=True)
class HeadChildMap:
    """Mapping head id -> ordered child ids; 0 is the virtual root."""

    branches: dict[int, tuple[int, ...]]

    def __contains__(self, head: int) -> bool:
        return head in self.branches

    def children(self, head: int) -> tuple[int, ...]:
        return self.branches.get(head, ())


def _parse_feats(text: str, line_no: int, sent_id: str | None) -> dict[str, str]:
    if text == "_":
        return {}
    feats: dict[str, str] = {}
    for item in text.split("|"):
        key, sep, value = item.partition("=")
        if not sep or not key or not value:
            raise MalformedLine(f"bad feats item {item!r}", line_no=line_no, sent_id=sent_id)
        if key in feats:
            raise MalformedLine(f"duplicate feature {key!r}", line_no=line_no, sent_id=sent_id)
        feats[key] = value
    return feats


def parse_conllu(source: str | Iterable[str]) -> list[Sentence]:
    """Parse CoNLL-U text (a string or an iterable of lines) into sentences.

    Blank lines separate sentences; ``#`` comment lines are preserved on
    the resulting Sentence and a ``# sent_id = ...`` comment populates
    ``sent_id``. Raises MalformedLine or InvalidTree on bad input.
    """
    if isinstance(source, str):
        lines: Iterable[str] = source.splitlines()
    else:
        lines = (line.rstrip("\n").rstrip("\r") for line in source)

    sentences: list[Sentence] = []
    comments: list[str] = []
    # parsed word fields, each with the line it came from
    rows: list[tuple[int, int, str, str, str, dict[str, str], int, str]] = []
    block_start: int | None = None
    sent_id: str | None = None

    def flush() -> None:
        nonlocal comments, rows, block_start, sent_id
        if rows:
            tokens = []
            for ln, tid, form, lemma, upos, feats, head, deprel in rows:
                if head == tid:
                    raise InvalidTree(f"token {tid} is its own head", line_no=ln, sent_id=sent_id)
                tokens.append(Token(tid, form, lemma, upos, feats, head, deprel))
            try:
                sentence = Sentence(tuple(tokens), sent_id=sent_id, comments=tuple(comments))
            except InvalidTree as err:
                raise InvalidTree(err.message, line_no=block_start, sent_id=sent_id) from None
            sentences.append(sentence)
        comments = []
        rows = []
        block_start = None
        sent_id = None

    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            flush()
            continue
        if block_start is None:
            block_start = line_no
        if line.startswith("#"):
            comments.append(line)
            match = _SENT_ID_COMMENT.match(line)
            if match:
                sent_id = match.group(1).strip() or None
            continue
        cols = line.split("\t")
        if len(cols) != WORD_COLUMNS:
            raise MalformedLine(
                f"expected {WORD_COLUMNS} tab-separated columns, got {len(cols)}",
                line_no=line_no,
                sent_id=sent_id,
            )
        raw_id = cols[0]
        if _RANGE_OR_EMPTY_ID.match(raw_id):
            continue  # multiword ranges and empty nodes carry no tree structure
        if not _WORD_ID.match(raw_id) or int(raw_id) < 1:
            raise MalformedLine(f"bad token id {raw_id!r}", line_no=line_no, sent_id=sent_id)
        try:
            head = int(cols[6])
        except ValueError:
            raise MalformedLine(
                f"non-integer head {cols[6]!r}", line_no=line_no, sent_id=sent_id
            ) from None
        if head < 0:
            raise MalformedLine(f"negative head {head}", line_no=line_no, sent_id=sent_id)
        feats = _parse_feats(cols[5], line_no, sent_id)
        rows.append((line_no, int(raw_id), cols[1], cols[2], cols[3], feats, head, cols[7]))
    flush()
    return sentences


def parse_conllu_file(path: str | Path) -> list[Sentence]:
    """Parse one UTF-8 CoNLL-U file."""
    return parse_conllu(Path(path).read_text(encoding="utf-8"))


def serialize_conllu(sentences: Iterable[Sentence]) -> str:
    """Render sentences back to CoNLL-U text.

    Round-trip safe: parsing the output yields token-identical sentences
    for the seven modeled fields. Unmodeled columns are written as "_",
    feature names in sorted order, and each sentence ends with one blank
    line.
    """
    out: list[str] = []
    for sentence in sentences:
        comments = list(sentence.comments)
        if sentence.sent_id is not None and not any(_SENT_ID_COMMENT.match(c) for c in comments):
            comments.insert(0, f"# sent_id = {sentence.sent_id}")
        out.extend(comments)
        for t in sentence.tokens:
            feats = "|".join(f"{k}={v}" for k, v in sorted(t.feats.items())) if t.feats else "_"
            out.append(
                "\t".join(
                    [str(t.id), t.form, t.lemma, t.upos, "_", feats, str(t.head), t.deprel, "_", "_"]
                )
            )
        out.append("")
    return "\n".join(out) + ("\n" if out else "")


def build_head_child_map(sentence: Sentence) -> HeadChildMap:
    """Group the sentence's tokens by head id, children in token order."""
    branches: dict[int, list[int]] = {}
    for token in sentence.tokens:
        branches.setdefault(token.head, []).append(token.id)
    return HeadChildMap({head: tuple(kids) for head, kids in branches.items()})


def branch_order(head_child_map: HeadChildMap) -> list[int]:
    """Order heads deepest-first (ties by increasing id); the virtual root is last.

    Depth of a head is the number of head links between it and the
    virtual root, so every head is visited only after all heads inside
    its subtree.
    """
    parent: dict[int, int] = {}
    for head, kids in head_child_map.branches.items():
        for child in kids:
            parent[child] = head
    depths = {0: 0}

    def depth(node: int) -> int:
        if node not in depths:
            depths[node] = 1 + depth(parent[node])
        return depths[node]

    return sorted(head_child_map.branches, key=lambda h: (-depth(h), h))
