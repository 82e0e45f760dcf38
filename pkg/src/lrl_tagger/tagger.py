"""Train / predict / save / load facade over codec and backend.

Bundle layout::

    manifest.json   version, backend id, model name, codec checksum, timestamp
    labels.json     the tag codec
    config.json     BackendConfig used for training
    backend/        backend state in its own format
"""

from __future__ import annotations

import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence, Union

from .backend import BackendConfig, TaggingModel, backend_class, train
from .corpus import Corpus
from .errors import BundleCorrupt, ConfigError, EmptyCorpus, EmptyInput, IoFailure, SchemaMismatch, VersionMismatch
from .labels import TagCodec, fit_codec

BUNDLE_VERSION = 1
MANIFEST = "manifest.json"
LABELS = "labels.json"
CONFIG = "config.json"
BACKEND_DIR = "backend"
_MANIFEST_KEYS = {"version", "backend_id", "model_name", "codec_sha256", "created_utc"}


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


class POSTagger:
    """A trained tagger: codec, backend model and the config that produced it."""

    def __init__(self, codec: TagCodec, model: TaggingModel, config: BackendConfig):
        self.codec = codec
        self.model = model
        self.config = config

    def __repr__(self) -> str:
        return f"POSTagger(backend={self.config.backend_id!r}, tags={len(self.codec)})"

    @classmethod
    def fit(cls, corpus: Corpus, config: BackendConfig | None = None) -> "POSTagger":
        config = config or BackendConfig()
        if len(corpus) == 0:
            raise EmptyCorpus()
        codec = fit_codec(corpus.tagset)
        return cls(codec, train(corpus, codec, config), config)

    def predict_tags(self, words: Sequence[str]) -> list[str]:
        return self.model.predict_word_tags(list(words), self.codec)

    def predict(self, text_or_words: Union[str, Sequence[str]]) -> list[tuple[str, str]]:
        """Tag a raw string (split on whitespace) or a list of pre-split words."""
        if isinstance(text_or_words, str):
            words = text_or_words.split()
        else:
            words = list(text_or_words)
        if not words:
            raise EmptyInput("nothing to tag")
        tags = self.predict_tags(words)
        return list(zip(words, tags))

    def save(self, directory: str | Path) -> Path:
        directory = Path(directory)
        codec_bytes = self.codec.to_json().encode("utf-8")
        manifest = {
            "version": BUNDLE_VERSION,
            "backend_id": self.config.backend_id,
            "model_name": self.config.model_name,
            "codec_sha256": _sha256(codec_bytes),
            "created_utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        }
        try:
            (directory / BACKEND_DIR).mkdir(parents=True, exist_ok=True)
            (directory / LABELS).write_bytes(codec_bytes)
            (directory / CONFIG).write_text(
                json.dumps(self.config.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
            )
            self.model.save(directory / BACKEND_DIR)
            # manifest last: a bundle without one is visibly incomplete
            (directory / MANIFEST).write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            raise IoFailure(f"cannot write bundle to {directory}: {exc}") from exc
        return directory

    @classmethod
    def load(cls, directory: str | Path) -> "POSTagger":
        directory = Path(directory)
        manifest = _read_manifest(directory)
        try:
            codec_bytes = (directory / LABELS).read_bytes()
        except OSError as exc:
            raise BundleCorrupt(f"missing codec file: {exc}") from None
        if _sha256(codec_bytes) != manifest["codec_sha256"]:
            raise BundleCorrupt("codec checksum does not match the manifest")
        try:
            codec = TagCodec.from_json(codec_bytes.decode("utf-8"))
        except (SchemaMismatch, UnicodeDecodeError) as exc:
            raise BundleCorrupt(f"invalid codec file: {exc}") from None
        try:
            config = BackendConfig.from_dict(json.loads((directory / CONFIG).read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError, ConfigError, TypeError) as exc:
            raise BundleCorrupt(f"invalid config.json: {exc}") from None
        if config.backend_id != manifest["backend_id"]:
            raise BundleCorrupt(
                f"manifest says {manifest['backend_id']!r} but config says {config.backend_id!r}"
            )
        model = backend_class(config.backend_id).load(directory / BACKEND_DIR, codec, config)
        return cls(codec, model, config)

    load_pretrained = load


def _read_manifest(directory: Path) -> dict:
    path = directory / MANIFEST
    try:
        manifest = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise BundleCorrupt(f"{directory} has no {MANIFEST}") from None
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise BundleCorrupt(f"unreadable manifest: {exc}") from None
    if not isinstance(manifest, dict):
        raise BundleCorrupt("manifest is not a JSON object")
    if manifest.get("version") != BUNDLE_VERSION:
        raise VersionMismatch(f"bundle version {manifest.get('version')!r}, expected {BUNDLE_VERSION}")
    missing = _MANIFEST_KEYS - set(manifest)
    if missing:
        raise BundleCorrupt(f"manifest lacks {sorted(missing)}")
    return manifest


def fit(corpus: Corpus, config: BackendConfig | None = None) -> POSTagger:
    return POSTagger.fit(corpus, config)


def load(directory: str | Path) -> POSTagger:
    return POSTagger.load(directory)


def load_pretrained(directory: str | Path) -> POSTagger:
    """Load a bundle trained elsewhere; ready to predict without fitting."""
    return POSTagger.load(directory)
