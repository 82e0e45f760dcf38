"""Frequency tagger with suffix back-off.

Lookup order for a word:

1. the word's most frequent training tag;
2. for unseen words, the longest suffix (4 down to 1 characters) that
   occurred at least twice in training, and that suffix's most frequent tag;
3. the corpus-wide most frequent tag.

Every argmax breaks ties toward the lexicographically smallest tag.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from pathlib import Path
from typing import Mapping, Optional, Sequence

from ..corpus import Corpus
from ..errors import BundleCorrupt, EmptyCorpus, EmptyInput, IoFailure, ModelNotTrained
from ..labels import TagCodec
from .base import BackendConfig, TaggingModel, check_coverage

STATE_VERSION = 1
STATE_FILE = "baseline_state.json"
MAX_SUFFIX = 4
MIN_SUFFIX_COUNT = 2


def _argmax_tag(counts: Mapping[str, int]) -> str:
    return min(counts, key=lambda tag: (-counts[tag], tag))


class BaselineModel(TaggingModel):
    backend_id = "baseline"

    def __init__(
        self,
        word_table: Optional[dict[str, str]] = None,
        suffix_table: Optional[dict[str, str]] = None,
        majority_tag: Optional[str] = None,
        num_labels: int = 0,
    ):
        self.word_table = dict(word_table or {})
        self.suffix_table = dict(suffix_table or {})
        self.majority_tag = majority_tag
        self._num_labels = num_labels

    @property
    def num_labels(self) -> int:
        return self._num_labels

    @property
    def is_trained(self) -> bool:
        return self.majority_tag is not None

    @classmethod
    def train(cls, corpus: Corpus, codec: TagCodec, config: BackendConfig | None = None) -> "BaselineModel":
        if len(corpus) == 0:
            raise EmptyCorpus()
        check_coverage(corpus, codec)
        word_counts: dict[str, Counter] = defaultdict(Counter)
        suffix_counts: dict[str, Counter] = defaultdict(Counter)
        tag_counts: Counter = Counter()
        for sentence in corpus:
            for word, tag in sentence.pairs():
                word_counts[word][tag] += 1
                tag_counts[tag] += 1
                for n in range(1, min(MAX_SUFFIX, len(word)) + 1):
                    suffix_counts[word[-n:]][tag] += 1
        word_table = {w: _argmax_tag(c) for w, c in word_counts.items()}
        suffix_table = {
            s: _argmax_tag(c) for s, c in suffix_counts.items() if sum(c.values()) >= MIN_SUFFIX_COUNT
        }
        return cls(word_table, suffix_table, _argmax_tag(tag_counts), len(codec))

    def tag_word(self, word: str) -> str:
        if not self.is_trained:
            raise ModelNotTrained("baseline model has no training state")
        tag = self.word_table.get(word)
        if tag is not None:
            return tag
        for n in range(min(MAX_SUFFIX, len(word)), 0, -1):
            tag = self.suffix_table.get(word[-n:])
            if tag is not None:
                return tag
        return self.majority_tag

    def predict_word_tags(self, words: Sequence[str], codec: TagCodec) -> list[str]:
        if not words:
            raise EmptyInput("no words to tag")
        return [self.tag_word(w) for w in words]

    def state_dict(self) -> dict:
        return {
            "version": STATE_VERSION,
            "word_table": self.word_table,
            "suffix_table": self.suffix_table,
            "majority_tag": self.majority_tag,
        }

    def save(self, directory: Path) -> None:
        if not self.is_trained:
            raise ModelNotTrained("refusing to save an untrained model")
        text = json.dumps(self.state_dict(), ensure_ascii=False, sort_keys=True, indent=1) + "\n"
        try:
            (Path(directory) / STATE_FILE).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot write baseline state: {exc}") from exc

    @classmethod
    def load(cls, directory: Path, codec: TagCodec, config: BackendConfig | None = None) -> "BaselineModel":
        path = Path(directory) / STATE_FILE
        if not path.is_file():
            raise BundleCorrupt(f"missing baseline state file {path}")
        try:
            state = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise BundleCorrupt(f"unreadable baseline state: {exc}") from None
        if not isinstance(state, dict) or state.get("version") != STATE_VERSION:
            raise BundleCorrupt("baseline state has the wrong version or shape")
        try:
            word_table = dict(state["word_table"])
            suffix_table = dict(state["suffix_table"])
            majority = state["majority_tag"]
        except (KeyError, TypeError, ValueError):
            raise BundleCorrupt("baseline state is missing tables") from None
        unknown = {majority, *word_table.values(), *suffix_table.values()} - set(codec.tags)
        if unknown:
            raise BundleCorrupt(f"baseline state uses tags absent from the codec: {sorted(map(str, unknown))}")
        return cls(word_table, suffix_table, majority, len(codec))
