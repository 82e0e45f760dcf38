"""Tagging backends behind one contract.

``baseline`` is always available.  ``transformer`` needs torch and
transformers and is only imported when asked for.
"""

from __future__ import annotations

from typing import Sequence

from ..corpus import Corpus
from ..labels import TagCodec
from .base import BACKEND_IDS, BackendConfig, TaggingModel, check_coverage
from .baseline import BaselineModel

__all__ = [
    "BACKEND_IDS",
    "BackendConfig",
    "BaselineModel",
    "TaggingModel",
    "backend_class",
    "check_coverage",
    "predict_word_tags",
    "train",
]


def backend_class(backend_id: str) -> type[TaggingModel]:
    if backend_id == "baseline":
        return BaselineModel
    if backend_id == "transformer":
        from .transformer import TransformerModel

        return TransformerModel
    raise ValueError(f"unknown backend {backend_id!r}")


def train(corpus: Corpus, codec: TagCodec, config: BackendConfig) -> TaggingModel:
    return backend_class(config.backend_id).train(corpus, codec, config)


def predict_word_tags(model: TaggingModel, words: Sequence[str], codec: TagCodec) -> list[str]:
    return model.predict_word_tags(words, codec)
