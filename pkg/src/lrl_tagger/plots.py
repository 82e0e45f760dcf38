"""Matplotlib figures: confusion heatmap and tag distribution bars."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def confusion_heatmap(
    matrix: np.ndarray,
    row_labels: Sequence[str],
    col_labels: Sequence[str],
    path: str | Path,
    fmt: str = "png",
    title: str = "Confusion matrix",
) -> None:
    n_rows, n_cols = matrix.shape
    size = max(4.0, 0.55 * max(n_rows, n_cols) + 2)
    fig, ax = plt.subplots(figsize=(size, size * 0.85))
    im = ax.imshow(matrix, cmap="Blues", aspect="auto")
    fig.colorbar(im, ax=ax, fraction=0.046, pad=0.04)
    ax.set_xticks(range(n_cols), labels=list(col_labels), rotation=45, ha="right")
    ax.set_yticks(range(n_rows), labels=list(row_labels))
    ax.set_xlabel("Predicted")
    ax.set_ylabel("Gold")
    ax.set_title(title)
    threshold = matrix.max() / 2 if matrix.size else 0
    for i in range(n_rows):
        for j in range(n_cols):
            value = int(matrix[i, j])
            ax.text(j, i, str(value), ha="center", va="center", fontsize=8,
                    color="white" if value > threshold else "black")
    fig.tight_layout()
    fig.savefig(path, format=fmt)
    plt.close(fig)


def distribution_bars(ranked: Sequence[tuple[str, int, float]], path: str | Path, title: str = "Tag distribution") -> None:
    tags = [r[0] for r in ranked]
    counts = [r[1] for r in ranked]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * len(tags) + 2), 4))
    bars = ax.bar(tags, counts, color="tab:blue")
    for bar, (_, _, frac) in zip(bars, ranked):
        ax.annotate(f"{frac:.1%}", (bar.get_x() + bar.get_width() / 2, bar.get_height()),
                    ha="center", va="bottom", fontsize=8)
    ax.set_ylabel("tokens")
    ax.set_title(title)
    plt.setp(ax.get_xticklabels(), rotation=45, ha="right")
    fig.tight_layout()
    fig.savefig(path, format=Path(path).suffix.lstrip(".") or "png")
    plt.close(fig)
