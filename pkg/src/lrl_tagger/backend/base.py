from __future__ import annotations

import abc
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Sequence

from ..corpus import Corpus
from ..errors import CodecCoverageError, ConfigError
from ..labels import TagCodec

BACKEND_IDS = ("baseline", "transformer")


@dataclass(frozen=True)
class BackendConfig:
    backend_id: str = "baseline"
    model_name: str = ""
    max_length: int = 128
    epochs: int = 3
    batch_size: int = 16
    learning_rate: float = 5e-5
    seed: int = 42

    def __post_init__(self) -> None:
        if self.backend_id not in BACKEND_IDS:
            raise ConfigError(f"backend_id must be one of {BACKEND_IDS}, got {self.backend_id!r}")
        if self.backend_id == "transformer" and not self.model_name:
            raise ConfigError("the transformer backend needs a model_name")
        for name in ("max_length", "epochs", "batch_size"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(self.learning_rate, (int, float)) or self.learning_rate <= 0:
            raise ConfigError(f"learning_rate must be positive, got {self.learning_rate!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "BackendConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown backend keys: {sorted(unknown)}")
        return cls(**data)


class TaggingModel(abc.ABC):
    """What every backend provides once trained.

    Implementations are immutable after training, so ``predict_word_tags``
    may be called concurrently.
    """

    backend_id: str

    @property
    @abc.abstractmethod
    def num_labels(self) -> int: ...

    @classmethod
    @abc.abstractmethod
    def train(cls, corpus: Corpus, codec: TagCodec, config: BackendConfig) -> "TaggingModel": ...

    @abc.abstractmethod
    def predict_word_tags(self, words: Sequence[str], codec: TagCodec) -> list[str]: ...

    @abc.abstractmethod
    def save(self, directory: Path) -> None:
        """Write backend state into ``directory`` (created by the caller)."""

    @classmethod
    @abc.abstractmethod
    def load(cls, directory: Path, codec: TagCodec, config: BackendConfig) -> "TaggingModel": ...


def check_coverage(corpus: Corpus, codec: TagCodec) -> None:
    missing = [t for t in corpus.tagset if t not in codec]
    if missing:
        raise CodecCoverageError(f"corpus tags not in codec: {missing}")
