"""Reading, writing, splitting and summarising word/tag corpora.

The canonical on-disk form is two-column text: one ``word<TAB>tag`` pair
per line and a blank line between sentences.  A second "parallel" form
holds one sentence per line as ``sentence text<TAB>tag sequence``, both
halves whitespace separated; :func:`parse_parallel` converts it.
"""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DegenerateSplit,
    EmptyCorpus,
    IoFailure,
    LengthMismatch,
    MalformedLine,
)

TAB = "\t"
_FORBIDDEN = ("\n", "\r")


@dataclass(frozen=True)
class TaggedSentence:
    words: tuple[str, ...]
    tags: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", tuple(self.words))
        object.__setattr__(self, "tags", tuple(self.tags))
        if not self.words:
            raise ValueError("a sentence needs at least one word")
        if len(self.words) != len(self.tags):
            raise LengthMismatch(len(self.words), len(self.tags))
        for item in self.words + self.tags:
            if not isinstance(item, str) or not item:
                raise ValueError(f"words and tags must be non-empty strings, got {item!r}")
            if TAB in item or any(ch in item for ch in _FORBIDDEN):
                raise ValueError(f"{item!r} contains a tab or newline")

    def __len__(self) -> int:
        return len(self.words)

    def pairs(self) -> list[tuple[str, str]]:
        return list(zip(self.words, self.tags))


@dataclass(frozen=True)
class Corpus:
    sentences: tuple[TaggedSentence, ...] = ()
    tagset: tuple[str, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sentences", tuple(self.sentences))
        seen = {tag for s in self.sentences for tag in s.tags}
        object.__setattr__(self, "tagset", tuple(sorted(seen)))

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    @property
    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)

    @classmethod
    def from_pairs(cls, sentences: Iterable[Sequence[tuple[str, str]]]) -> "Corpus":
        out = []
        for pairs in sentences:
            words, tags = zip(*pairs)
            out.append(TaggedSentence(words, tags))
        return cls(tuple(out))


@dataclass(frozen=True)
class TagDistribution:
    counts: dict[str, int]
    fractions: dict[str, float]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def ranked(self) -> list[tuple[str, int, float]]:
        """Rows sorted by descending count, ties by tag."""
        order = sorted(self.counts, key=lambda t: (-self.counts[t], t))
        return [(t, self.counts[t], self.fractions[t]) for t in order]

    def top_share(self, k: int = 2) -> float:
        return sum(frac for _, _, frac in self.ranked()[:k])


def parse_two_column(text: str, delimiter: str = TAB) -> Corpus:
    """Parse ``word<delim>tag`` lines with blank-line sentence breaks.

    Blank input yields an empty corpus; callers that need data check
    ``len(corpus)`` or let :func:`tag_distribution` / the split raise.
    """
    if not delimiter or delimiter in "\r\n":
        raise ValueError(f"unusable delimiter {delimiter!r}")
    sentences: list[TaggedSentence] = []
    words: list[str] = []
    tags: list[str] = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            if words:
                sentences.append(TaggedSentence(words, tags))
                words, tags = [], []
            continue
        parts = line.split(delimiter)
        if len(parts) != 2:
            raise MalformedLine(line_no, line)
        word, tag = parts
        if not word or not tag.strip():
            raise MalformedLine(line_no, line, reason="empty word or tag")
        try:
            sentence_check = TaggedSentence((word,), (tag.strip(),))
        except ValueError as exc:
            raise MalformedLine(line_no, line, reason=str(exc)) from None
        words.append(sentence_check.words[0])
        tags.append(sentence_check.tags[0])
    if words:
        sentences.append(TaggedSentence(words, tags))
    return Corpus(tuple(sentences))


def serialize_two_column(corpus: Corpus, delimiter: str = TAB) -> str:
    blocks = []
    for sentence in corpus:
        lines = []
        for word, tag in sentence.pairs():
            if delimiter in word or delimiter in tag:
                raise ValueError(f"{word!r}/{tag!r} contains the delimiter {delimiter!r}")
            lines.append(f"{word}{delimiter}{tag}")
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def normalize_parallel(sentence_text: str, tag_text: str) -> TaggedSentence:
    """Zip a whitespace-separated sentence with its whitespace-separated tags."""
    words = sentence_text.split()
    tags = tag_text.split()
    if len(words) != len(tags):
        raise LengthMismatch(len(words), len(tags))
    return TaggedSentence(words, tags)


def parse_parallel(text: str) -> Corpus:
    """Parse one ``sentence<TAB>tags`` row per line; blank lines are skipped."""
    sentences = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        parts = line.split(TAB)
        if len(parts) != 2:
            raise MalformedLine(line_no, line, reason="expected 'sentence<TAB>tags'")
        try:
            sentence = normalize_parallel(*parts)
        except LengthMismatch as exc:
            raise LengthMismatch(exc.n_left, exc.n_right, line_no=line_no) from None
        except ValueError as exc:
            raise MalformedLine(line_no, line, reason=str(exc)) from None
        sentences.append(sentence)
    return Corpus(tuple(sentences))


FORMATS = {
    "two_column": parse_two_column,
    "parallel": parse_parallel,
}


def read_corpus(path: str | Path, format: str = "two_column") -> Corpus:
    try:
        parser = FORMATS[format]
    except KeyError:
        raise ValueError(f"unknown corpus format {format!r}; choose from {sorted(FORMATS)}") from None
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    return parser(text)


def write_corpus(corpus: Corpus, path: str | Path) -> None:
    try:
        Path(path).write_text(serialize_two_column(corpus), encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def split_train_test(corpus: Corpus, train_fraction: float = 0.8, seed: int = 0) -> tuple[Corpus, Corpus]:
    """Seeded sentence-level split; ``floor(n * train_fraction)`` sentences go to train.

    Both halves keep the original sentence order.
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must lie strictly between 0 and 1, got {train_fraction}")
    n = len(corpus)
    if n == 0:
        raise EmptyCorpus()
    n_train = math.floor(n * train_fraction)
    if n_train == 0 or n_train == n:
        raise DegenerateSplit(f"{n} sentences at fraction {train_fraction} leaves one side empty")
    order = list(range(n))
    random.Random(seed).shuffle(order)
    train_idx = sorted(order[:n_train])
    test_idx = sorted(order[n_train:])
    sents = corpus.sentences
    return Corpus(tuple(sents[i] for i in train_idx)), Corpus(tuple(sents[i] for i in test_idx))


def tag_distribution(corpus: Corpus) -> TagDistribution:
    counts: dict[str, int] = {}
    for sentence in corpus:
        for tag in sentence.tags:
            counts[tag] = counts.get(tag, 0) + 1
    total = sum(counts.values())
    if total == 0:
        raise EmptyCorpus()
    counts = dict(sorted(counts.items()))
    return TagDistribution(counts, {t: c / total for t, c in counts.items()})


def export_distribution_csv(dist: TagDistribution, path: str | Path) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["tag", "count", "fraction"])
            for tag, count, frac in dist.ranked():
                writer.writerow([tag, count, f"{frac:.6f}"])
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc
