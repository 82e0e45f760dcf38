"""Language-agnostic part-of-speech tagging for low-resource languages."""

from .alignment import AlignedExample, SubwordTokenization, align_labels, collapse_predictions
from .backend import BackendConfig, TaggingModel
from .corpus import (
    Corpus,
    TagDistribution,
    TaggedSentence,
    normalize_parallel,
    parse_parallel,
    parse_two_column,
    read_corpus,
    serialize_two_column,
    split_train_test,
    tag_distribution,
)
from .evaluation import EvaluationReport, evaluate, evaluate_tagger, render_report
from .labels import TagCodec, fit_codec, load_codec, save_codec
from .tagger import POSTagger, fit, load, load_pretrained

__version__ = "0.1.0"

__all__ = [
    "AlignedExample",
    "BackendConfig",
    "Corpus",
    "EvaluationReport",
    "POSTagger",
    "SubwordTokenization",
    "TagCodec",
    "TagDistribution",
    "TaggedSentence",
    "TaggingModel",
    "align_labels",
    "collapse_predictions",
    "evaluate",
    "evaluate_tagger",
    "fit",
    "fit_codec",
    "load",
    "load_codec",
    "load_pretrained",
    "normalize_parallel",
    "parse_parallel",
    "parse_two_column",
    "read_corpus",
    "render_report",
    "save_codec",
    "serialize_two_column",
    "split_train_test",
    "tag_distribution",
]
