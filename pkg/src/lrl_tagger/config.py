"""Run configuration files.

A run config is a JSON object::

    {
      "language": "bangla",
      "train_path": "data/bangla_like.tsv",
      "format": "two_column",
      "split": {"fraction": 0.8, "seed": 13},
      "backend": {"backend_id": "baseline", "model_name": "csebuetnlp/banglabert"}
    }

Relative paths resolve against the config file's directory.  Either
``eval_path`` or ``split`` decides the evaluation data, never both.  Without
``output_dir`` runs land in ``$LRL_TAGGER_HOME/<language>``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .backend import BackendConfig
from .corpus import FORMATS
from .errors import ConfigError

HOME_ENV = "LRL_TAGGER_HOME"
_KEYS = {"language", "train_path", "eval_path", "format", "backend", "split", "output_dir"}


def tagger_home() -> Path:
    env = os.environ.get(HOME_ENV)
    return Path(env) if env else Path.home() / ".lrl_tagger"


@dataclass(frozen=True)
class SplitConfig:
    fraction: float = 0.8
    seed: int = 0


@dataclass(frozen=True)
class RunConfig:
    language: str
    train_path: Path
    backend: BackendConfig = field(default_factory=BackendConfig)
    format: str = "two_column"
    eval_path: Optional[Path] = None
    split: Optional[SplitConfig] = None
    output_dir: Optional[Path] = None

    def __post_init__(self) -> None:
        if not self.language:
            raise ConfigError("language must be set")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {sorted(FORMATS)}, got {self.format!r}")
        if self.eval_path is not None and self.split is not None:
            raise ConfigError("give either eval_path or split, not both")
        if self.eval_path is None and self.split is None:
            object.__setattr__(self, "split", SplitConfig())

    @property
    def run_dir(self) -> Path:
        base = self.output_dir if self.output_dir is not None else tagger_home()
        return base / self.language

    @classmethod
    def from_dict(cls, data: dict[str, Any], base_dir: Path) -> "RunConfig":
        unknown = set(data) - _KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "train_path" not in data or not data["train_path"]:
            raise ConfigError("train_path is required")

        def resolve(value):
            return None if value is None else (base_dir / value).resolve()

        split = data.get("split")
        try:
            split_cfg = None if split is None else SplitConfig(**split)
            backend = BackendConfig.from_dict(data.get("backend", {}))
        except TypeError as exc:
            raise ConfigError(str(exc)) from None
        return cls(
            language=data.get("language", ""),
            train_path=resolve(data["train_path"]),
            backend=backend,
            format=data.get("format", "two_column"),
            eval_path=resolve(data.get("eval_path")),
            split=split_cfg,
            output_dir=resolve(data.get("output_dir")),
        )


def load_run_config(path: str | Path) -> RunConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return RunConfig.from_dict(data, path.resolve().parent)
