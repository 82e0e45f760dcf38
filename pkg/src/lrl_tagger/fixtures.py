"""Deterministic synthetic corpora for tests, demos and the shipped configs.

Each tag owns a vocabulary of words ``stem + tag_suffix``; the suffixes are
distinct per tag and none is a suffix of another, so every word has exactly
one tag and an unseen ``new_stem + tag_suffix`` is recoverable from its
ending alone.  Tag frequencies follow the supplied weights.

Run ``python -m lrl_tagger.fixtures OUT_DIR`` to regenerate the data files
used by ``configs/``.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path
from typing import Mapping, Sequence

from .corpus import Corpus, TaggedSentence, write_corpus

# Per-class test supports of reference Bangla (5 classes) and Hindi (16
# classes) evaluations; only used as sampling weights.
BANGLA_WEIGHTS = {"1": 1265, "2": 513, "3": 622, "4": 1376, "5": 831}
HINDI_WEIGHTS = {
    "CC": 10, "INTF": 1, "JJ": 26, "NEG": 4, "NN": 100, "NNP": 38, "NST": 1, "PRP": 12,
    "PSP": 47, "QC": 5, "QF": 1, "RB": 1, "RP": 1, "SYM": 2666, "VAUX": 34, "VM": 46,
}

BENGALI_LETTERS = "কখগঘচছজঝটঠডঢতথদধনপফবভমযরলশসহ"
DEVANAGARI_LETTERS = "कखगघचछजझटठडढतथदधनपफबभमयरलवशसह"
LATIN_LETTERS = "bcdfghjklmnpqrstvwxz"


def _tag_suffixes(tags: Sequence[str], alphabet: str, rng: random.Random, length: int = 3) -> dict[str, str]:
    # equal length and pairwise distinct, so no suffix ends another
    seen: set[str] = set()
    out = {}
    for tag in tags:
        while True:
            suffix = "".join(rng.choice(alphabet) for _ in range(length))
            if suffix not in seen:
                break
        seen.add(suffix)
        out[tag] = suffix
    return out


def _stem(rng: random.Random, alphabet: str) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(2, 4)))


def make_corpus(
    weights: Mapping[str, float],
    n_sentences: int = 200,
    seed: int = 0,
    alphabet: str = LATIN_LETTERS,
    words_per_tag: int = 12,
    min_len: int = 3,
    max_len: int = 9,
    weight_floor: float = 0.02,
) -> Corpus:
    """Unambiguous corpus: every word maps to a single tag.

    Weights are normalised and floored at ``weight_floor`` so rare tags still
    appear; the first ``len(weights)`` sentences each open with a different
    tag so every tag is guaranteed to occur.
    """
    rng = random.Random(seed)
    tags = sorted(weights)
    suffixes = _tag_suffixes(tags, alphabet, rng)
    vocab: dict[str, list[str]] = {}
    used: set[str] = set()
    for tag in tags:
        words: list[str] = []
        while len(words) < words_per_tag:
            word = _stem(rng, alphabet) + suffixes[tag]
            if word not in used:
                used.add(word)
                words.append(word)
        vocab[tag] = words
    total = float(sum(weights.values()))
    probs = [max(weights[t] / total, weight_floor) for t in tags]

    sentences = []
    for i in range(n_sentences):
        length = rng.randint(min_len, max_len)
        sent_tags = rng.choices(tags, weights=probs, k=length)
        if i < len(tags):
            sent_tags[0] = tags[i]
        sentences.append(TaggedSentence([rng.choice(vocab[t]) for t in sent_tags], sent_tags))
    return Corpus(tuple(sentences))


def tag_suffix_map(corpus: Corpus) -> dict[str, str]:
    """Recover each tag's 3-character ending from a corpus built by :func:`make_corpus`."""
    out = {}
    for sentence in corpus:
        for word, tag in sentence.pairs():
            out.setdefault(tag, word[-3:])
    return out


def inject_unknown_words(
    corpus: Corpus, rate: float = 0.1, seed: int = 0, alphabet: str = LATIN_LETTERS, known: set[str] | None = None
) -> tuple[Corpus, int]:
    """Replace about ``rate`` of the tokens with fresh words carrying the right tag ending.

    Returns the new corpus and how many tokens were replaced.  ``known``
    lists words that must not be produced (e.g. the training vocabulary).
    """
    rng = random.Random(seed)
    suffix = tag_suffix_map(corpus)
    banned = set(known or ()) | {w for s in corpus for w in s.words}
    replaced = 0
    out = []
    for sentence in corpus:
        words = list(sentence.words)
        for i, tag in enumerate(sentence.tags):
            if rng.random() < rate:
                while True:
                    new = _stem(rng, alphabet) + "".join(rng.choice(alphabet) for _ in range(2)) + suffix[tag]
                    if new not in banned:
                        break
                banned.add(new)
                words[i] = new
                replaced += 1
        out.append(TaggedSentence(words, sentence.tags))
    return Corpus(tuple(out)), replaced


def bangla_like(n_sentences: int = 200, seed: int = 0) -> Corpus:
    return make_corpus(BANGLA_WEIGHTS, n_sentences, seed, alphabet=BENGALI_LETTERS)


def hindi_like(n_sentences: int = 200, seed: int = 0) -> Corpus:
    return make_corpus(HINDI_WEIGHTS, n_sentences, seed, alphabet=DEVANAGARI_LETTERS)


def write_shipped_fixtures(out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = [out_dir / "bangla_like.tsv", out_dir / "hindi_like.tsv"]
    write_corpus(bangla_like(), paths[0])
    write_corpus(hindi_like(), paths[1])
    return paths


if __name__ == "__main__":
    for p in write_shipped_fixtures(sys.argv[1] if len(sys.argv) > 1 else "configs/data"):
        print(p)
