"""Tag <-> integer id codec."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .errors import EmptyTagset, IoFailure, SchemaMismatch, UnknownId, UnknownTag

CODEC_VERSION = 1
DEFAULT_IGNORE_ID = -100


@dataclass(frozen=True)
class TagCodec:
    """Immutable bijection between tags and ids ``0..n-1`` in sorted tag order.

    ``ignore_id`` marks positions that never score (special tokens and
    continuation subwords); it is never a valid class id.
    """

    tags: tuple[str, ...]
    ignore_id: int = DEFAULT_IGNORE_ID
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        tags = tuple(self.tags)
        object.__setattr__(self, "tags", tags)
        if not tags:
            raise EmptyTagset("a codec needs at least one tag")
        if any(not isinstance(t, str) or not t for t in tags):
            raise ValueError("tags must be non-empty strings")
        if len(set(tags)) != len(tags):
            raise ValueError("duplicate tags")
        if list(tags) != sorted(tags):
            raise ValueError("tags must be in lexicographic order")
        if not isinstance(self.ignore_id, int) or 0 <= self.ignore_id < len(tags):
            raise ValueError(f"ignore_id {self.ignore_id!r} collides with a class id")
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(tags)})

    def __len__(self) -> int:
        return len(self.tags)

    def __contains__(self, tag: object) -> bool:
        return tag in self._index

    @property
    def num_labels(self) -> int:
        return len(self.tags)

    def encode(self, tag: str) -> int:
        try:
            return self._index[tag]
        except (KeyError, TypeError):
            raise UnknownTag(tag) from None

    def decode(self, label_id: int) -> str:
        if isinstance(label_id, bool) or not isinstance(label_id, int) or not 0 <= label_id < len(self.tags):
            raise UnknownId(label_id)
        return self.tags[label_id]

    def get(self, tag: str, default: int | None = None) -> int | None:
        return self._index.get(tag, default)

    def encode_all(self, tags: Iterable[str]) -> list[int]:
        return [self.encode(t) for t in tags]

    def decode_all(self, ids: Iterable[int]) -> list[str]:
        return [self.decode(int(i)) for i in ids]

    def to_json(self) -> str:
        payload = {"version": CODEC_VERSION, "ignore_id": self.ignore_id, "tags": list(self.tags)}
        return json.dumps(payload, ensure_ascii=False, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "TagCodec":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaMismatch(f"codec file is not JSON: {exc}") from None
        if not isinstance(payload, dict) or set(payload) != {"version", "ignore_id", "tags"}:
            raise SchemaMismatch("codec file must hold exactly version, ignore_id and tags")
        if payload["version"] != CODEC_VERSION:
            raise SchemaMismatch(f"unsupported codec version {payload['version']!r}")
        tags = payload["tags"]
        ignore_id = payload["ignore_id"]
        if not isinstance(tags, list) or isinstance(ignore_id, bool) or not isinstance(ignore_id, int):
            raise SchemaMismatch("malformed tags or ignore_id")
        try:
            return cls(tuple(tags), ignore_id)
        except (ValueError, EmptyTagset) as exc:
            raise SchemaMismatch(str(exc)) from None


def fit_codec(tagset: Iterable[str], ignore_id: int = DEFAULT_IGNORE_ID) -> TagCodec:
    tags = set(tagset)
    if not tags:
        raise EmptyTagset("cannot fit a codec on an empty tagset")
    if "" in tags:
        raise ValueError("the empty string is not a valid tag")
    return TagCodec(tuple(sorted(tags)), ignore_id)


def save_codec(codec: TagCodec, path: str | Path) -> None:
    try:
        Path(path).write_bytes(codec.to_json().encode("utf-8"))
    except OSError as exc:
        raise IoFailure(f"cannot write codec to {path}: {exc}") from exc


def load_codec(path: str | Path) -> TagCodec:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read codec from {path}: {exc}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise SchemaMismatch(f"codec file is not UTF-8: {exc}") from None
    return TagCodec.from_json(text)
