"""Word-level labels onto subword tokens and back, first-subword scheme."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .corpus import TaggedSentence
from .errors import InconsistentTokenization, TruncationWarning
from .labels import TagCodec


@dataclass(frozen=True)
class SubwordTokenization:
    """Subword tokens plus, per token, the source word position (``None`` for specials)."""

    tokens: tuple[str, ...]
    word_index: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "word_index", tuple(self.word_index))
        if len(self.tokens) != len(self.word_index):
            raise InconsistentTokenization(
                f"{len(self.tokens)} tokens but {len(self.word_index)} word indices"
            )
        expected = 0
        prev = None
        for w in self.word_index:
            if w is None:
                prev = w
                continue
            # positions walk 0, 0, 1, 2, 2, ... with each word's subwords contiguous
            if w == expected - 1 and prev == w:
                continue
            if w != expected:
                raise InconsistentTokenization(f"word index {w} out of sequence (expected {expected})")
            expected += 1
            prev = w

    @property
    def num_words(self) -> int:
        """Words surviving in this tokenization."""
        return len(self.first_subword_positions())

    def first_subword_positions(self) -> list[int]:
        out = []
        prev = None
        for i, w in enumerate(self.word_index):
            if w is not None and w != prev:
                out.append(i)
            prev = w
        return out

    def scoring_mask(self) -> list[bool]:
        keep = set(self.first_subword_positions())
        return [i in keep for i in range(len(self.tokens))]


@dataclass(frozen=True)
class AlignedExample:
    tokenization: SubwordTokenization
    label_ids: tuple[int, ...]


def align_labels(
    sentence: TaggedSentence, tokenization: SubwordTokenization, codec: TagCodec
) -> AlignedExample:
    n_words = len(sentence.words)
    labels = []
    prev = None
    for w in tokenization.word_index:
        if w is None or w == prev:
            labels.append(codec.ignore_id)
        elif w >= n_words:
            raise InconsistentTokenization(f"token refers to word {w} of a {n_words}-word sentence")
        else:
            labels.append(codec.encode(sentence.tags[w]))
        prev = w
    return AlignedExample(tokenization, tuple(labels))


def collapse_predictions(
    predicted_ids: Sequence[int], tokenization: SubwordTokenization, codec: TagCodec
) -> list[str]:
    """One tag per surviving word: the decoded prediction at its first subword."""
    if len(predicted_ids) != len(tokenization.tokens):
        raise InconsistentTokenization(
            f"{len(predicted_ids)} predictions for {len(tokenization.tokens)} tokens"
        )
    return [codec.decode(int(predicted_ids[i])) for i in tokenization.first_subword_positions()]


def words_that_fit(subword_counts: Sequence[int], budget: int) -> int:
    """How many leading words fit in ``budget`` subwords without splitting one."""
    used = 0
    for n, count in enumerate(subword_counts):
        if used + count > budget:
            return n
        used += count
    return len(subword_counts)


def build_tokenization(
    words: Sequence[str],
    split_word: Callable[[str], Sequence[str]],
    *,
    bos: Optional[str] = None,
    eos: Optional[str] = None,
    max_length: Optional[int] = None,
) -> SubwordTokenization:
    """Tokenize pre-split words with ``split_word``, optionally framed by specials.

    With ``max_length`` set, trailing words that do not fit are dropped at a
    word boundary and a :class:`TruncationWarning` is issued.
    """
    pieces = []
    for w in words:
        sub = list(split_word(w))
        if not sub:
            raise InconsistentTokenization(f"word {w!r} produced no subwords")
        pieces.append(sub)
    n_keep = len(pieces)
    if max_length is not None:
        budget = max_length - (bos is not None) - (eos is not None)
        n_keep = words_that_fit([len(p) for p in pieces], budget)
        if n_keep < len(pieces):
            warnings.warn(
                f"sentence of {len(pieces)} words truncated to {n_keep} to fit {max_length} subwords",
                TruncationWarning,
                stacklevel=2,
            )
    tokens: list[str] = []
    index: list[Optional[int]] = []
    if bos is not None:
        tokens.append(bos)
        index.append(None)
    for w, sub in enumerate(pieces[:n_keep]):
        tokens.extend(sub)
        index.extend([w] * len(sub))
    if eos is not None:
        tokens.append(eos)
        index.append(None)
    return SubwordTokenization(tuple(tokens), tuple(index))
