"""Pretrained encoder + token classification head.

torch and transformers are imported lazily so the rest of the package works
without them; any entry point here raises ``BackendUnavailable`` when they
are missing.
"""

from __future__ import annotations

import logging
import random
import warnings
from pathlib import Path
from typing import Sequence

from ..alignment import SubwordTokenization, align_labels, collapse_predictions, words_that_fit
from ..corpus import Corpus, TaggedSentence
from ..errors import BackendUnavailable, BundleCorrupt, ConfigError, EmptyCorpus, EmptyInput, TruncationWarning
from ..labels import TagCodec
from .base import BackendConfig, TaggingModel, check_coverage

log = logging.getLogger(__name__)


def _runtime():
    try:
        import torch
        import transformers
    except ImportError as exc:
        raise BackendUnavailable(
            f"the transformer backend needs torch and transformers ({exc}); "
            "install with `pip install artifact[transformer]`"
        ) from None
    return torch, transformers


def masked_cross_entropy(logits, labels, ignore_id: int):
    """Mean token cross-entropy over positions whose label is not ``ignore_id``."""
    torch, _ = _runtime()
    flat_logits = logits.reshape(-1, logits.shape[-1])
    flat_labels = labels.reshape(-1)
    if not bool((flat_labels != ignore_id).any()):
        return flat_logits.sum() * 0.0
    return torch.nn.functional.cross_entropy(flat_logits, flat_labels, ignore_index=ignore_id)


class TransformerModel(TaggingModel):
    backend_id = "transformer"

    def __init__(self, model, tokenizer, max_length: int):
        self.model = model
        self.tokenizer = tokenizer
        self.max_length = max_length
        self._num_specials = tokenizer.num_special_tokens_to_add(pair=False)
        if max_length <= self._num_specials:
            raise ConfigError(f"max_length {max_length} leaves no room beside special tokens")

    @property
    def num_labels(self) -> int:
        return int(self.model.config.num_labels)

    # -- tokenization -------------------------------------------------------

    def _clean_words(self, words: Sequence[str]) -> list[str]:
        # a word the tokenizer maps to nothing would vanish from word_ids
        unk = self.tokenizer.unk_token or "[UNK]"
        out = []
        for w in words:
            if not self.tokenizer.tokenize(w):
                out.append(unk)
            else:
                out.append(w)
        return out

    def encode_words(self, words: Sequence[str], *, warn: bool = True):
        """Tokenize the longest word-aligned prefix that fits ``max_length``.

        Returns ``(input_ids, tokenization)``; ``tokenization.num_words``
        says how many leading words were kept.
        """
        words = self._clean_words(words)
        counts = [len(self.tokenizer.tokenize(w)) for w in words]
        budget = self.max_length - self._num_specials
        n_keep = words_that_fit(counts, budget)
        if n_keep < len(words) and warn:
            warnings.warn(
                f"sentence of {len(words)} words truncated to {n_keep} to fit {self.max_length} subwords",
                TruncationWarning,
                stacklevel=2,
            )
        if n_keep == 0:
            # a single word longer than the window: keep its leading subwords
            enc = self.tokenizer(words[:1], is_split_into_words=True, truncation=True, max_length=self.max_length)
        else:
            enc = self.tokenizer(words[:n_keep], is_split_into_words=True, truncation=False)
        ids = list(enc["input_ids"])
        tokenization = SubwordTokenization(
            tuple(self.tokenizer.convert_ids_to_tokens(ids)), tuple(enc.word_ids())
        )
        return ids, tokenization

    # -- training -----------------------------------------------------------

    @classmethod
    def train(cls, corpus: Corpus, codec: TagCodec, config: BackendConfig) -> "TransformerModel":
        torch, transformers = _runtime()
        if len(corpus) == 0:
            raise EmptyCorpus()
        check_coverage(corpus, codec)
        random.seed(config.seed)
        torch.manual_seed(config.seed)

        tokenizer = transformers.AutoTokenizer.from_pretrained(config.model_name)
        if not getattr(tokenizer, "is_fast", False):
            raise ConfigError(f"{config.model_name} has no fast tokenizer; word alignment needs one")
        model = transformers.AutoModelForTokenClassification.from_pretrained(
            config.model_name,
            num_labels=len(codec),
            id2label=dict(enumerate(codec.tags)),
            label2id={t: i for i, t in enumerate(codec.tags)},
        )
        self = cls(model, tokenizer, config.max_length)

        examples = [self._training_example(s, codec) for s in corpus]
        optimizer = torch.optim.AdamW(model.parameters(), lr=config.learning_rate)
        gen = torch.Generator().manual_seed(config.seed)
        model.train()
        for epoch in range(config.epochs):
            order = torch.randperm(len(examples), generator=gen).tolist()
            total = 0.0
            for start in range(0, len(order), config.batch_size):
                batch = [examples[i] for i in order[start : start + config.batch_size]]
                input_ids, attention, labels = self._collate(batch, codec.ignore_id)
                logits = model(input_ids=input_ids, attention_mask=attention).logits
                loss = masked_cross_entropy(logits, labels, codec.ignore_id)
                optimizer.zero_grad()
                loss.backward()
                optimizer.step()
                total += float(loss.detach())
            log.info("epoch %d/%d loss %.4f", epoch + 1, config.epochs, total)
        model.eval()
        return self

    def _training_example(self, sentence: TaggedSentence, codec: TagCodec):
        ids, tokenization = self.encode_words(sentence.words)
        kept = TaggedSentence(sentence.words[: tokenization.num_words], sentence.tags[: tokenization.num_words])
        return ids, align_labels(kept, tokenization, codec).label_ids

    def _collate(self, batch, ignore_id: int):
        torch, _ = _runtime()
        width = max(len(ids) for ids, _ in batch)
        pad = self.tokenizer.pad_token_id or 0
        input_ids = torch.full((len(batch), width), pad, dtype=torch.long)
        attention = torch.zeros((len(batch), width), dtype=torch.long)
        labels = torch.full((len(batch), width), ignore_id, dtype=torch.long)
        for row, (ids, label_ids) in enumerate(batch):
            input_ids[row, : len(ids)] = torch.tensor(ids)
            attention[row, : len(ids)] = 1
            labels[row, : len(ids)] = torch.tensor(label_ids)
        return input_ids, attention, labels

    # -- inference ----------------------------------------------------------

    def predict_subword_ids(self, input_ids: Sequence[int]) -> list[int]:
        torch, _ = _runtime()
        with torch.no_grad():
            logits = self.model(input_ids=torch.tensor([list(input_ids)])).logits[0]
        return logits.argmax(dim=-1).tolist()

    def predict_word_tags(self, words: Sequence[str], codec: TagCodec) -> list[str]:
        if not words:
            raise EmptyInput("no words to tag")
        tags: list[str] = []
        rest = list(words)
        # long inputs are tagged window by window so every word gets a tag
        while rest:
            ids, tokenization = self.encode_words(rest, warn=False)
            tags.extend(collapse_predictions(self.predict_subword_ids(ids), tokenization, codec))
            rest = rest[max(tokenization.num_words, 1) :]
        return tags

    # -- persistence --------------------------------------------------------

    def save(self, directory: Path) -> None:
        self.model.save_pretrained(str(directory))
        self.tokenizer.save_pretrained(str(directory))

    @classmethod
    def load(cls, directory: Path, codec: TagCodec, config: BackendConfig) -> "TransformerModel":
        _, transformers = _runtime()
        directory = Path(directory)
        if not (directory / "config.json").is_file():
            raise BundleCorrupt(f"{directory} holds no transformer checkpoint")
        tokenizer = transformers.AutoTokenizer.from_pretrained(str(directory))
        model = transformers.AutoModelForTokenClassification.from_pretrained(str(directory))
        if model.config.num_labels != len(codec):
            raise BundleCorrupt(f"checkpoint has {model.config.num_labels} labels, codec has {len(codec)}")
        model.eval()
        return cls(model, tokenizer, config.max_length)
