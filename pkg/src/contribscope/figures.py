"""Figure rendering for analysis outputs.

Renders the data objects from the analysis module to PNG files using
the Agg backend, which produces identical bytes for identical inputs.
These functions are presentation only; the numbers always come from
the corresponding delimited/JSON outputs.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .analysis import (
    CitationStats,
    CooccurrenceMatrix,
    DiversityRow,
    SimilaritySeries,
    TrendSeries,
    VenueProfile,
)

_DPI = 150


def _save(fig, path) -> None:
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_pmi_heatmap(matrix: CooccurrenceMatrix, path) -> None:
    k = len(matrix.labels)
    fig, ax = plt.subplots(figsize=(7, 6), constrained_layout=True)
    values = np.where(matrix.defined, matrix.pmi, np.nan)
    span = np.nanmax(np.abs(values)) or 1.0
    image = ax.imshow(values, cmap="RdBu_r", vmin=-span, vmax=span)
    ax.set_xticks(range(k), matrix.labels, rotation=45, ha="right")
    ax.set_yticks(range(k), matrix.labels)
    for i in range(k):
        for j in range(k):
            text = f"{values[i, j]:.2f}" if matrix.defined[i, j] else "n/a"
            ax.text(j, i, text, ha="center", va="center", fontsize=7)
    fig.colorbar(image, ax=ax, label="PMI (base 2)")
    ax.set_title("Label co-occurrence")
    _save(fig, path)


def render_trends(series: TrendSeries, path, smoothed: bool = False) -> None:
    data = series.smoothed if smoothed and series.smoothed is not None else series.shares
    fig, ax = plt.subplots(figsize=(8, 5), constrained_layout=True)
    for label, values in data.items():
        ax.plot(series.years, values, marker="o", markersize=3, label=label)
    ax.set_xlabel("year")
    ax.set_ylabel("papers with label (%)")
    ax.set_ylim(0, 100)
    ax.legend(fontsize=7, ncol=2)
    ax.set_title("Contribution trends" + (" (smoothed)" if smoothed else ""))
    _save(fig, path)


def render_venue_profiles(profiles: list[VenueProfile], path) -> None:
    if not profiles:
        return
    labels = list(profiles[0].shares)
    x = np.arange(len(labels))
    width = 0.8 / len(profiles)
    fig, ax = plt.subplots(figsize=(9, 5), constrained_layout=True)
    for i, prof in enumerate(profiles):
        ax.bar(x + i * width, [prof.shares[l] for l in labels], width, label=prof.venue)
    ax.set_xticks(x + 0.4 - width / 2, labels, rotation=45, ha="right")
    ax.set_ylabel("share of venue's papers")
    ax.legend(fontsize=7)
    ax.set_title("Venue contribution profiles")
    _save(fig, path)


def render_similarity(series: SimilaritySeries, path) -> None:
    by_venue: dict[str, list[tuple[int, float]]] = {}
    for row in series.rows:
        by_venue.setdefault(row.venue, []).append((row.year, row.similarity))
    fig, ax = plt.subplots(figsize=(8, 5), constrained_layout=True)
    for venue in sorted(by_venue):
        points = sorted(by_venue[venue])
        ax.plot([p[0] for p in points], [p[1] for p in points], marker="o", markersize=3, label=venue)
    ax.set_xlabel("year")
    ax.set_ylabel(f"similarity to {series.reference}")
    ax.set_ylim(0, 1)
    ax.legend(fontsize=7)
    ax.set_title("Venue convergence")
    _save(fig, path)


def render_diversity(rows: list[DiversityRow], path) -> None:
    by_venue: dict[str, list[tuple[int, float]]] = {}
    for row in rows:
        by_venue.setdefault(row.venue, []).append((row.year, row.mean_unique_labels))
    fig, ax = plt.subplots(figsize=(8, 5), constrained_layout=True)
    for venue in sorted(by_venue):
        points = sorted(by_venue[venue])
        ax.plot([p[0] for p in points], [p[1] for p in points], marker="o", markersize=3, label=venue)
    ax.set_xlabel("year")
    ax.set_ylabel("mean distinct labels per paper")
    ax.legend(fontsize=7)
    ax.set_title("Contribution diversity")
    _save(fig, path)


def render_citations(stats: CitationStats, path) -> None:
    labels = [r.label for r in stats.rows]
    x = np.arange(len(labels))
    fig, ax = plt.subplots(figsize=(8, 5), constrained_layout=True)
    ax.bar(x - 0.2, [r.mean for r in stats.rows], 0.4, label="mean")
    ax.bar(x + 0.2, [r.median for r in stats.rows], 0.4, label="median")
    ax.set_xticks(x, labels, rotation=45, ha="right")
    ax.set_ylabel("citations")
    ax.legend()
    ax.set_title("Citations by contribution label")
    _save(fig, path)
