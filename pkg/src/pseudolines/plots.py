"""Report figures for the scan commands.

Renders the value distribution of a scan (exact simultaneous minima, or
line-coloring gaps) as a bar chart next to the text report.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .oracles import SearchReport

__all__ = ["save_distribution_figure"]

_TITLES = {
    "simultaneous": "exact simultaneous minimum",
    "mx-gap": "line-coloring colors minus max crossings per wire",
}


def save_distribution_figure(report: SearchReport, path: str, dpi: int = 120) -> None:
    values = sorted(report.distribution)
    counts = [report.distribution[v] for v in values]
    labels = [str(v) for v in values]
    if report.exceeded:
        labels.append("> cap")
        counts.append(report.exceeded)

    fig, ax = plt.subplots(figsize=(5.4, 3.4))
    bars = ax.bar(range(len(counts)), counts, color="#3b6ea5")
    ax.set_xticks(range(len(counts)))
    ax.set_xticklabels(labels)
    ax.set_xlabel(_TITLES.get(report.kind, "value"))
    ax.set_ylabel("diagrams")
    ax.set_title(f"{report.kind} scan, n={report.n}, {report.examined} diagrams")
    for bar, count in zip(bars, counts):
        ax.annotate(
            str(count),
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
            fontsize=8,
        )
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
