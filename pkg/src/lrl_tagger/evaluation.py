"""Classification report, word-level accuracy and confusion matrix."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Sequence

import numpy as np

from .corpus import Corpus
from .errors import EmptyInput, IoFailure, LengthMismatch, UnknownTag, UnsupportedFormat
from .labels import TagCodec

OTHER = "OTHER"
SUMMARY_NAMES = ("Accuracy", "Macro Avg", "Weighted Avg")
CSV_SUMMARY_NAMES = ("__accuracy__", "__macro__", "__weighted__")
CONFUSION_FORMATS = ("png", "svg", "csv")


def _ratio(num: float, den: float) -> float:
    return num / den if den else 0.0


def _f1(precision: float, recall: float) -> float:
    total = precision + recall
    return 2 * precision * recall / total if total else 0.0


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class Averages:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class EvaluationReport:
    labels: tuple[str, ...]
    """Gold classes, in codec order; these are the confusion rows."""
    columns: tuple[str, ...]
    """Predicted classes; ``labels`` plus ``OTHER`` when a prediction fell outside the codec."""
    confusion: np.ndarray
    per_class: dict[str, ClassMetrics]
    accuracy: float
    macro_avg: Averages
    weighted_avg: Averages
    total_support: int

    @property
    def correct(self) -> int:
        n = len(self.labels)
        return int(np.trace(self.confusion[:, :n]))


def evaluate(gold: Sequence[str], pred: Sequence[str], codec: TagCodec) -> EvaluationReport:
    """Per-class precision/recall/F1 and averages over word-level tag sequences.

    Zero denominators give 0.0.  Predicted tags the codec does not know are
    tallied in an extra ``OTHER`` column.  Macro averages cover every codec
    class that occurs in ``gold`` or ``pred``.
    """
    if len(gold) != len(pred):
        raise LengthMismatch(len(gold), len(pred), what="gold/pred")
    if not gold:
        raise EmptyInput("nothing to evaluate")
    n = len(codec)
    gold_ids = np.fromiter((codec.encode(g) for g in gold), dtype=np.int64, count=len(gold))
    pred_ids = np.fromiter((codec.get(p, n) for p in pred), dtype=np.int64, count=len(pred))
    has_other = bool((pred_ids == n).any())
    width = n + 1 if has_other else n
    confusion = np.zeros((n, width), dtype=np.int64)
    np.add.at(confusion, (gold_ids, pred_ids), 1)

    tp = np.diag(confusion[:, :n])
    support = confusion.sum(axis=1)
    predicted = confusion[:, :n].sum(axis=0)
    per_class = {}
    for i, tag in enumerate(codec.tags):
        p = _ratio(tp[i], predicted[i])
        r = _ratio(tp[i], support[i])
        per_class[tag] = ClassMetrics(float(p), float(r), float(_f1(p, r)), int(support[i]))

    total = int(support.sum())
    present = [tag for i, tag in enumerate(codec.tags) if support[i] or predicted[i]]
    macro = Averages(
        *(float(np.mean([getattr(per_class[t], k) for t in present])) for k in ("precision", "recall", "f1"))
    )
    weighted = Averages(
        *(
            sum(getattr(m, k) * m.support for m in per_class.values()) / total
            for k in ("precision", "recall", "f1")
        )
    )
    columns = codec.tags + ((OTHER,) if has_other else ())
    return EvaluationReport(
        labels=codec.tags,
        columns=columns,
        confusion=confusion,
        per_class=per_class,
        accuracy=int(tp.sum()) / total,
        macro_avg=macro,
        weighted_avg=weighted,
        total_support=total,
    )


def evaluate_tagger(tagger, test: Corpus) -> EvaluationReport:
    """Score ``tagger`` word by word over every sentence of ``test``."""
    if len(test) == 0:
        raise EmptyInput("empty test corpus")
    gold: list[str] = []
    pred: list[str] = []
    for sentence in test:
        gold.extend(sentence.tags)
        pred.extend(tagger.predict_tags(sentence.words))
    unknown = sorted(set(gold) - set(tagger.codec.tags))
    if unknown:
        raise UnknownTag(unknown[0])
    return evaluate(gold, pred, tagger.codec)


def round_half_up(value: float, places: int) -> str:
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def render_report(report: EvaluationReport) -> str:
    names = list(report.labels) + list(SUMMARY_NAMES)
    name_w = max(len(n) for n in names + ["class"])
    head = f"{'class':<{name_w}}  {'precision':>9}  {'recall':>9}  {'f1-score':>9}  {'support':>7}"
    lines = [head, "-" * len(head)]

    def row(name, p, r, f, support):
        return f"{name:<{name_w}}  {p:>9}  {r:>9}  {f:>9}  {support:>7}"

    for tag in report.labels:
        m = report.per_class[tag]
        lines.append(
            row(tag, round_half_up(m.precision, 2), round_half_up(m.recall, 2), round_half_up(m.f1, 2), m.support)
        )
    lines.append("-" * len(head))
    lines.append(row("Accuracy", "", "", round_half_up(report.accuracy, 4), report.total_support))
    for name, avg in (("Macro Avg", report.macro_avg), ("Weighted Avg", report.weighted_avg)):
        lines.append(
            row(
                name,
                round_half_up(avg.precision, 2),
                round_half_up(avg.recall, 2),
                round_half_up(avg.f1, 2),
                report.total_support,
            )
        )
    lines.append("")
    lines.append(f"Token-level accuracy: {round_half_up(report.accuracy, 4)}")
    return "\n".join(lines) + "\n"


def export_report_csv(report: EvaluationReport, path: str | Path) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["class", "precision", "recall", "f1", "support"])
            for tag in report.labels:
                m = report.per_class[tag]
                writer.writerow([tag, f"{m.precision:.6f}", f"{m.recall:.6f}", f"{m.f1:.6f}", m.support])
            writer.writerow([CSV_SUMMARY_NAMES[0], "", "", f"{report.accuracy:.6f}", report.total_support])
            for name, avg in zip(CSV_SUMMARY_NAMES[1:], (report.macro_avg, report.weighted_avg)):
                writer.writerow(
                    [name, f"{avg.precision:.6f}", f"{avg.recall:.6f}", f"{avg.f1:.6f}", report.total_support]
                )
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def render_confusion(report: EvaluationReport, path: str | Path, format: str | None = None) -> Path:
    """Write the confusion matrix (gold rows, predicted columns) as CSV or a heatmap.

    ``format`` defaults to the file suffix.
    """
    path = Path(path)
    fmt = (format or path.suffix.lstrip(".")).lower()
    if fmt not in CONFUSION_FORMATS:
        raise UnsupportedFormat(f"confusion format {fmt!r} not in {CONFUSION_FORMATS}")
    try:
        if fmt == "csv":
            with open(path, "w", encoding="utf-8", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow([""] + list(report.columns))
                for tag, counts in zip(report.labels, report.confusion):
                    writer.writerow([tag] + [int(c) for c in counts])
        else:
            from .plots import confusion_heatmap

            confusion_heatmap(report.confusion, report.labels, report.columns, path, fmt)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc
    return path
