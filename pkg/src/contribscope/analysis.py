"""Corpus-level analyses over per-sentence label sets.

All operations consume PaperLabels rows (one per paper, carrying the
label sets of its abstract sentences) and return plain data objects
with ``to_rows`` (long-form records for delimited output) and
``to_dict`` (JSON shape). Figure rendering lives elsewhere.
"""

from __future__ import annotations

import logging
import statistics
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DataError
from .taxonomy import ALL_LABELS, ContributionLabel, LabelSet
from .venues import Venue

logger = logging.getLogger(__name__)

DEFAULT_MATURITY_YEARS = 5


@dataclass(frozen=True)
class PaperLabels:
    """A paper reduced to what the analyses need."""

    paper_id: str
    venue: Venue
    year: int | None
    sentence_labels: tuple[LabelSet, ...]
    citation_count: int | None = None

    @property
    def label_union(self) -> LabelSet:
        out: set[ContributionLabel] = set()
        for ls in self.sentence_labels:
            out |= ls
        return frozenset(out)


# ---------------------------------------------------------------- PMI

@dataclass(frozen=True)
class CooccurrenceMatrix:
    labels: tuple[str, ...]
    pmi: np.ndarray  # (8, 8), NaN where undefined
    defined: np.ndarray  # (8, 8) bool
    joint_counts: np.ndarray  # (8, 8) int
    marginals: np.ndarray  # (8,) p(label)
    n_statements: int

    def to_rows(self) -> list[dict]:
        rows = []
        for i, a in enumerate(self.labels):
            for j, b in enumerate(self.labels):
                rows.append(
                    {
                        "label_a": a,
                        "label_b": b,
                        "pmi": float(self.pmi[i, j]) if self.defined[i, j] else None,
                        "defined": bool(self.defined[i, j]),
                        "joint_count": int(self.joint_counts[i, j]),
                    }
                )
        return rows

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "n_statements": self.n_statements,
            "marginals": {a: float(self.marginals[i]) for i, a in enumerate(self.labels)},
            "entries": self.to_rows(),
        }


def pmi_matrix(statements: Sequence[LabelSet]) -> CooccurrenceMatrix:
    """Pointwise mutual information between label pairs, base 2.

    Probabilities are over statements carrying at least one label:
    p(a) = count(a)/N, p(a,b) = count(a and b)/N,
    PMI(a,b) = log2(p(a,b) / (p(a) p(b))). A zero joint count leaves
    the entry undefined (flagged, not imputed).
    """
    nonempty = [ls for ls in statements if ls]
    n = len(nonempty)
    if n == 0:
        raise DataError("co-occurrence needs at least one labeled statement")
    k = len(ALL_LABELS)
    joint = np.zeros((k, k), dtype=np.int64)
    for ls in nonempty:
        idx = [i for i, label in enumerate(ALL_LABELS) if label in ls]
        for i in idx:
            for j in idx:
                joint[i, j] += 1
    marginals = np.diag(joint) / n
    pmi = np.full((k, k), np.nan, dtype=np.float64)
    defined = joint > 0
    for i in range(k):
        for j in range(k):
            if defined[i, j]:
                pmi[i, j] = np.log2((joint[i, j] / n) / (marginals[i] * marginals[j]))
    return CooccurrenceMatrix(
        labels=tuple(str(l) for l in ALL_LABELS),
        pmi=pmi,
        defined=defined,
        joint_counts=joint,
        marginals=marginals,
        n_statements=n,
    )


# ------------------------------------------------------------- trends

@dataclass(frozen=True)
class TrendSeries:
    years: tuple[int, ...]  # ascending
    paper_counts: tuple[int, ...]
    shares: dict[str, tuple[float, ...]]  # percent of papers per year
    window: int | None = None
    smoothed: dict[str, tuple[float, ...]] | None = None

    def to_rows(self) -> list[dict]:
        rows = []
        for t, year in enumerate(self.years):
            for label in self.shares:
                row = {
                    "year": year,
                    "label": label,
                    "share_pct": self.shares[label][t],
                    "n_papers": self.paper_counts[t],
                }
                if self.smoothed is not None:
                    row["share_pct_smoothed"] = self.smoothed[label][t]
                rows.append(row)
        return rows

    def to_dict(self) -> dict:
        out = {
            "years": list(self.years),
            "paper_counts": list(self.paper_counts),
            "shares": {label: list(vals) for label, vals in self.shares.items()},
        }
        if self.smoothed is not None:
            out["window"] = self.window
            out["smoothed"] = {label: list(vals) for label, vals in self.smoothed.items()}
        return out


def _trailing_mean(values: Sequence[float], window: int) -> tuple[float, ...]:
    out = []
    for t in range(len(values)):
        lo = max(0, t - window + 1)
        chunk = values[lo : t + 1]
        out.append(sum(chunk) / len(chunk))
    return tuple(out)


def yearly_type_share(papers: Sequence[PaperLabels], window: int | None = None) -> TrendSeries:
    """Percent of papers per year containing each label at least once.

    Papers without a year are skipped (logged). The optional smoothed
    series is a trailing mean over the last ``window`` years.
    """
    if window is not None and window < 1:
        raise DataError(f"window must be a positive integer, got {window}")
    by_year: dict[int, list[PaperLabels]] = defaultdict(list)
    skipped = 0
    for paper in papers:
        if paper.year is None:
            skipped += 1
            continue
        by_year[paper.year].append(paper)
    if skipped:
        logger.warning("%d papers without a year excluded from trends", skipped)
    if not by_year:
        raise DataError("no papers with years to build trends from")
    years = tuple(sorted(by_year))
    counts = tuple(len(by_year[y]) for y in years)
    shares: dict[str, tuple[float, ...]] = {}
    for label in ALL_LABELS:
        vals = []
        for y in years:
            with_label = sum(1 for p in by_year[y] if label in p.label_union)
            vals.append(100.0 * with_label / len(by_year[y]))
        shares[str(label)] = tuple(vals)
    smoothed = None
    if window is not None:
        smoothed = {label: _trailing_mean(vals, window) for label, vals in shares.items()}
    return TrendSeries(years=years, paper_counts=counts, shares=shares, window=window, smoothed=smoothed)


# ------------------------------------------------------------- venues

@dataclass(frozen=True)
class VenueProfile:
    venue: str
    n_papers: int
    shares: dict[str, float]  # fraction of the venue's papers containing the label

    def to_dict(self) -> dict:
        return {"venue": self.venue, "n_papers": self.n_papers, "shares": dict(self.shares)}


def venue_profiles(papers: Sequence[PaperLabels]) -> list[VenueProfile]:
    """Label shares per canonical venue, normalized by the venue's paper count."""
    by_venue: dict[Venue, list[PaperLabels]] = defaultdict(list)
    for paper in papers:
        by_venue[paper.venue].append(paper)
    profiles = []
    for venue in sorted(by_venue, key=lambda v: v.value):
        group = by_venue[venue]
        shares = {
            str(label): sum(1 for p in group if label in p.label_union) / len(group)
            for label in ALL_LABELS
        }
        profiles.append(VenueProfile(venue=venue.value, n_papers=len(group), shares=shares))
    return profiles


def profiles_to_rows(profiles: Sequence[VenueProfile]) -> list[dict]:
    return [
        {"venue": prof.venue, "label": label, "share": share, "n_papers": prof.n_papers}
        for prof in profiles
        for label, share in prof.shares.items()
    ]


# ------------------------------------------------- venue convergence

def entropy_base2(p: np.ndarray) -> float:
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def jensen_shannon_divergence(p: np.ndarray, q: np.ndarray) -> float:
    """Base-2 JSD: H(M) - (H(P) + H(Q))/2 with M the midpoint. In [0, 1]."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise DataError(f"distribution shapes differ: {p.shape} vs {q.shape}")
    for name, dist in (("p", p), ("q", q)):
        if np.any(dist < 0) or not np.isclose(dist.sum(), 1.0, atol=1e-9):
            raise DataError(f"{name} is not a probability distribution")
    m = 0.5 * (p + q)
    return entropy_base2(m) - 0.5 * (entropy_base2(p) + entropy_base2(q))


def distribution_similarity(p: np.ndarray, q: np.ndarray) -> float:
    """1 - JSD(p, q); 1 means identical, 0 means disjoint support."""
    return 1.0 - jensen_shannon_divergence(p, q)


def _assignment_distribution(group: Sequence[PaperLabels]) -> np.ndarray | None:
    """Label-assignment counts over a venue-year, renormalized; None if empty."""
    counts = np.zeros(len(ALL_LABELS), dtype=np.float64)
    for paper in group:
        for ls in paper.sentence_labels:
            for i, label in enumerate(ALL_LABELS):
                if label in ls:
                    counts[i] += 1.0
    total = counts.sum()
    if total == 0:
        return None
    return counts / total


@dataclass(frozen=True)
class SimilarityRow:
    venue: str
    year: int
    similarity: float


@dataclass(frozen=True)
class SimilaritySeries:
    reference: str
    rows: tuple[SimilarityRow, ...]

    def to_rows(self) -> list[dict]:
        return [
            {"venue": r.venue, "year": r.year, "reference": self.reference, "similarity": r.similarity}
            for r in self.rows
        ]

    def to_dict(self) -> dict:
        return {"reference": self.reference, "rows": self.to_rows()}


def venue_similarity_series(papers: Sequence[PaperLabels], reference: Venue) -> SimilaritySeries:
    """Yearly similarity of each venue's label distribution to the reference's.

    Venue-years where either side has no label assignments are skipped
    and logged, not imputed.
    """
    by_venue_year: dict[tuple[Venue, int], list[PaperLabels]] = defaultdict(list)
    for paper in papers:
        if paper.year is not None:
            by_venue_year[(paper.venue, paper.year)].append(paper)
    ref_dists: dict[int, np.ndarray] = {}
    for (venue, year), group in by_venue_year.items():
        if venue is reference:
            dist = _assignment_distribution(group)
            if dist is not None:
                ref_dists[year] = dist
    rows = []
    for (venue, year) in sorted(by_venue_year, key=lambda k: (k[0].value, k[1])):
        if venue is reference:
            continue
        dist = _assignment_distribution(by_venue_year[(venue, year)])
        ref = ref_dists.get(year)
        if dist is None or ref is None:
            logger.info("skipping %s/%d: no comparable label distribution", venue.value, year)
            continue
        rows.append(SimilarityRow(venue=venue.value, year=year, similarity=distribution_similarity(dist, ref)))
    return SimilaritySeries(reference=reference.value, rows=tuple(rows))


# ---------------------------------------------------------- diversity

@dataclass(frozen=True)
class DiversityRow:
    venue: str
    year: int
    mean_unique_labels: float
    n_papers: int


def unique_types_per_paper(papers: Sequence[PaperLabels]) -> list[DiversityRow]:
    """Mean count of distinct labels per paper, within each venue-year."""
    by_venue_year: dict[tuple[Venue, int], list[int]] = defaultdict(list)
    for paper in papers:
        if paper.year is None:
            continue
        by_venue_year[(paper.venue, paper.year)].append(len(paper.label_union))
    rows = []
    for (venue, year) in sorted(by_venue_year, key=lambda k: (k[0].value, k[1])):
        counts = by_venue_year[(venue, year)]
        rows.append(
            DiversityRow(
                venue=venue.value,
                year=year,
                mean_unique_labels=sum(counts) / len(counts),
                n_papers=len(counts),
            )
        )
    return rows


def diversity_to_rows(rows: Sequence[DiversityRow]) -> list[dict]:
    return [
        {
            "venue": r.venue,
            "year": r.year,
            "mean_unique_labels": r.mean_unique_labels,
            "n_papers": r.n_papers,
        }
        for r in rows
    ]


# ---------------------------------------------------------- citations

@dataclass(frozen=True)
class CitationRow:
    label: str
    n_papers: int
    mean: float
    median: float


@dataclass(frozen=True)
class CitationStats:
    rows: tuple[CitationRow, ...]
    n_considered: int
    n_missing_citations: int
    as_of_year: int | None

    def to_rows(self) -> list[dict]:
        return [
            {"label": r.label, "n_papers": r.n_papers, "mean": r.mean, "median": r.median}
            for r in self.rows
        ]

    def to_dict(self) -> dict:
        return {
            "as_of_year": self.as_of_year,
            "n_considered": self.n_considered,
            "n_missing_citations": self.n_missing_citations,
            "per_label": self.to_rows(),
        }


def citation_stats(
    papers: Sequence[PaperLabels],
    venue: Venue | None = None,
    year: int | None = None,
    mature_only: bool = True,
    maturity_years: int = DEFAULT_MATURITY_YEARS,
    as_of_year: int | None = None,
) -> CitationStats:
    """Citation count, mean and median per label over the filtered papers.

    The maturity filter keeps papers at least ``maturity_years`` old;
    "now" defaults to the newest year in the unfiltered corpus so the
    result does not depend on the wall clock. Papers without a citation
    count are excluded and tallied, not treated as zero.
    """
    if mature_only and as_of_year is None:
        years = [p.year for p in papers if p.year is not None]
        as_of_year = max(years) if years else None
    selected = []
    missing = 0
    for paper in papers:
        if venue is not None and paper.venue is not venue:
            continue
        if year is not None and paper.year != year:
            continue
        if mature_only and as_of_year is not None:
            if paper.year is None or paper.year > as_of_year - maturity_years:
                continue
        if paper.citation_count is None:
            missing += 1
            continue
        selected.append(paper)
    if not selected:
        raise DataError("citation filter selected no papers with citation counts")
    rows = []
    for label in ALL_LABELS:
        cites = [p.citation_count for p in selected if label in p.label_union]
        if cites:
            rows.append(
                CitationRow(
                    label=str(label),
                    n_papers=len(cites),
                    mean=sum(cites) / len(cites),
                    median=float(statistics.median(cites)),
                )
            )
        else:
            rows.append(CitationRow(label=str(label), n_papers=0, mean=0.0, median=0.0))
    return CitationStats(
        rows=tuple(rows),
        n_considered=len(selected),
        n_missing_citations=missing,
        as_of_year=as_of_year if mature_only else None,
    )
