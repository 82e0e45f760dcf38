"""Exception types raised across the toolkit."""

from __future__ import annotations


class TaggerError(Exception):
    """Base class for every error this package raises on purpose."""


class MalformedLine(TaggerError):
    def __init__(self, line_no: int, line: str = "", reason: str = "expected exactly one delimiter"):
        self.line_no = line_no
        self.line = line
        super().__init__(f"line {line_no}: {reason}: {line!r}")


class EmptyCorpus(TaggerError):
    def __init__(self, message: str = "corpus contains no sentences"):
        super().__init__(message)


class LengthMismatch(TaggerError):
    def __init__(self, n_left: int, n_right: int, line_no: int | None = None, what: str = "words/tags"):
        self.n_left = n_left
        self.n_right = n_right
        self.line_no = line_no
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{where}{what} length mismatch ({n_left} != {n_right})")


class DegenerateSplit(TaggerError):
    pass


class EmptyTagset(TaggerError):
    pass


class UnknownTag(TaggerError, KeyError):
    def __init__(self, tag: str):
        self.tag = tag
        super().__init__(f"unknown tag {tag!r}")

    def __str__(self) -> str:
        return self.args[0]


class UnknownId(TaggerError, KeyError):
    def __init__(self, label_id: int):
        self.label_id = label_id
        super().__init__(f"unknown label id {label_id}")

    def __str__(self) -> str:
        return self.args[0]


class SchemaMismatch(TaggerError):
    pass


class IoFailure(TaggerError):
    pass


class InconsistentTokenization(TaggerError):
    pass


class CodecCoverageError(TaggerError):
    pass


class BackendUnavailable(TaggerError):
    pass


class ModelNotTrained(TaggerError):
    pass


class BundleCorrupt(TaggerError):
    pass


class VersionMismatch(TaggerError):
    pass


class EmptyInput(TaggerError):
    pass


class UnsupportedFormat(TaggerError):
    pass


class ConfigError(TaggerError):
    pass


class TruncationWarning(UserWarning):
    """A sentence did not fit the encoder window and lost trailing words."""
