"""Evaluation metrics: macro P/R/F1, McNemar's test, Fleiss' kappa.

The evaluation universe is the eight contribution labels; the empty
set is a valid prediction but never averaged as a ninth label.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DataError
from .taxonomy import ALL_LABELS, ContributionLabel, LabelSet


@dataclass(frozen=True)
class LabelConfusion:
    label: ContributionLabel
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0


@dataclass(frozen=True)
class MacroScores:
    precision: float
    recall: float
    f1: float
    per_label: tuple[LabelConfusion, ...]

    def to_dict(self) -> dict:
        return {
            "per_label": {
                str(c.label): {
                    "p": c.precision, "r": c.recall, "f1": c.f1,
                    "tp": c.tp, "fp": c.fp, "fn": c.fn, "tn": c.tn,
                }
                for c in self.per_label
            },
            "macro": {"p": self.precision, "r": self.recall, "f1": self.f1},
        }


def confusion_counts(
    gold: Sequence[LabelSet], pred: Sequence[LabelSet], labels: Sequence[ContributionLabel]
) -> list[LabelConfusion]:
    if len(gold) != len(pred):
        raise DataError(f"{len(gold)} gold label sets but {len(pred)} predictions")
    out = []
    for label in labels:
        tp = fp = fn = tn = 0
        for g, p in zip(gold, pred):
            in_g, in_p = label in g, label in p
            if in_g and in_p:
                tp += 1
            elif in_p:
                fp += 1
            elif in_g:
                fn += 1
            else:
                tn += 1
        out.append(LabelConfusion(label, tp, fp, fn, tn))
    return out


def macro_prf1(
    gold: Sequence[LabelSet],
    pred: Sequence[LabelSet],
    labels: Sequence[ContributionLabel] = ALL_LABELS,
) -> MacroScores:
    """Per-label P/R/F1 (0/0 defined as 0), averaged unweighted over labels."""
    table = confusion_counts(gold, pred, labels)
    return MacroScores(
        precision=sum(c.precision for c in table) / len(table),
        recall=sum(c.recall for c in table) / len(table),
        f1=sum(c.f1 for c in table) / len(table),
        per_label=tuple(table),
    )


def exact_match(gold: Sequence[LabelSet], pred: Sequence[LabelSet]) -> float:
    """Fraction of sentences whose full label set matches. Not the default
    evaluation: it gives no credit for partially correct sets."""
    if len(gold) != len(pred):
        raise DataError(f"{len(gold)} gold label sets but {len(pred)} predictions")
    if not gold:
        raise DataError("cannot evaluate zero sentences")
    return sum(1 for g, p in zip(gold, pred) if g == p) / len(gold)


def format_macro_table(scores: MacroScores) -> str:
    """Aligned-column (P, R, F1) rendering, one row per label plus the average."""
    width = max(len(str(c.label)) for c in scores.per_label)
    lines = [f"{'label':<{width}}  {'P':>6}  {'R':>6}  {'F1':>6}"]
    for c in scores.per_label:
        lines.append(f"{str(c.label):<{width}}  {c.precision:>6.3f}  {c.recall:>6.3f}  {c.f1:>6.3f}")
    lines.append(f"{'macro':<{width}}  {scores.precision:>6.3f}  {scores.recall:>6.3f}  {scores.f1:>6.3f}")
    return "\n".join(lines)


def mcnemar(correct_a: Sequence[bool], correct_b: Sequence[bool]) -> tuple[float, float]:
    """Continuity-corrected McNemar's test on paired correctness indicators.

    statistic = (|b - c| - 1)^2 / (b + c) with b, c the discordant
    counts; p from the chi-squared (df=1) tail, which for x >= 0 equals
    erfc(sqrt(x/2)). No discordant pairs: statistic 0, p 1.
    """
    if len(correct_a) != len(correct_b):
        raise DataError(f"{len(correct_a)} decisions for A but {len(correct_b)} for B")
    b = sum(1 for x, y in zip(correct_a, correct_b) if x and not y)
    c = sum(1 for x, y in zip(correct_a, correct_b) if y and not x)
    if b + c == 0:
        return 0.0, 1.0
    stat = (abs(b - c) - 1) ** 2 / (b + c)
    return stat, math.erfc(math.sqrt(stat / 2.0))


def decision_vector(
    gold: Sequence[LabelSet], pred: Sequence[LabelSet], labels: Sequence[ContributionLabel] = ALL_LABELS
) -> list[bool]:
    """Pooled sentence-by-label correctness, the pairing unit for mcnemar."""
    if len(gold) != len(pred):
        raise DataError(f"{len(gold)} gold label sets but {len(pred)} predictions")
    return [(label in g) == (label in p) for g, p in zip(gold, pred) for label in labels]


def fleiss_kappa(table: np.ndarray) -> float:
    """Fleiss' kappa for an (items x categories) rater-count table.

    kappa = (Pbar - Pe) / (1 - Pe) with
      P_i = (sum_j n_ij^2 - n) / (n (n - 1)),
      Pe  = sum_j p_j^2,  p_j the share of all ratings in category j.
    Pe = 1 only when every rating is one category, which forces perfect
    agreement; defined as 1.0.
    """
    table = np.asarray(table, dtype=np.float64)
    if table.ndim != 2 or table.shape[1] < 2:
        raise DataError("agreement table must be 2-d with at least 2 categories")
    if table.shape[0] < 2:
        raise DataError("agreement requires at least 2 items")
    if np.any(table < 0):
        raise DataError("rater counts must be non-negative")
    row_sums = table.sum(axis=1)
    n = row_sums[0]
    if not np.all(row_sums == n):
        raise DataError("every item must have the same number of raters")
    if n < 2:
        raise DataError("agreement requires at least 2 raters per item")
    p_i = (np.sum(table**2, axis=1) - n) / (n * (n - 1))
    p_bar = float(np.mean(p_i))
    shares = table.sum(axis=0) / table.sum()
    p_e = float(np.sum(shares**2))
    if p_e >= 1.0:
        return 1.0
    return (p_bar - p_e) / (1.0 - p_e)


class KappaCI(NamedTuple):
    lower: float
    upper: float
    clamped: bool


MIN_RESAMPLES = 100


def kappa_ci(table: np.ndarray, level: float = 0.95, resamples: int = 1000, seed: int = 0) -> KappaCI:
    """Percentile-bootstrap confidence interval for Fleiss' kappa.

    Items are resampled with replacement; the interval is widened to
    bracket the full-table point estimate when the percentiles miss it
    (reported via the clamped flag).
    """
    if resamples < MIN_RESAMPLES:
        raise DataError(f"resamples must be at least {MIN_RESAMPLES}, got {resamples}")
    if not 0.0 < level < 1.0:
        raise DataError(f"level must be inside (0, 1), got {level}")
    table = np.asarray(table, dtype=np.float64)
    point = fleiss_kappa(table)
    n_items = table.shape[0]
    rng = np.random.default_rng(seed)
    stats = np.empty(resamples, dtype=np.float64)
    for r in range(resamples):
        rows = rng.integers(0, n_items, size=n_items)
        stats[r] = fleiss_kappa(table[rows])
    alpha = 1.0 - level
    lower = float(np.quantile(stats, alpha / 2))
    upper = float(np.quantile(stats, 1 - alpha / 2))
    clamped = not lower <= point <= upper
    if clamped:
        lower = min(lower, point)
        upper = max(upper, point)
    return KappaCI(lower, upper, clamped)


def agreement_tables(
    ratings: Iterable[tuple[object, str, LabelSet]],
    labels: Sequence[ContributionLabel] = ALL_LABELS,
) -> dict[ContributionLabel, np.ndarray]:
    """Per-label binary present/absent tables from (item, annotator, labels) triples.

    Every item must be rated by the same number of annotators; an
    annotator may rate an item only once.
    """
    by_item: dict[object, dict[str, LabelSet]] = defaultdict(dict)
    for item, annotator, label_set in ratings:
        if annotator in by_item[item]:
            raise DataError(f"annotator {annotator!r} rated item {item!r} twice")
        by_item[item][annotator] = label_set
    if not by_item:
        raise DataError("no ratings supplied")
    counts = {len(raters) for raters in by_item.values()}
    if len(counts) != 1:
        raise DataError(f"items have varying rater counts: {sorted(counts)}")
    items = sorted(by_item, key=repr)
    out: dict[ContributionLabel, np.ndarray] = {}
    for label in labels:
        table = np.zeros((len(items), 2), dtype=np.float64)
        for i, item in enumerate(items):
            present = sum(1 for ls in by_item[item].values() if label in ls)
            table[i, 0] = present
            table[i, 1] = len(by_item[item]) - present
        out[label] = table
    return out


@dataclass(frozen=True)
class AgreementRow:
    label: str
    kappa: float
    ci: KappaCI


@dataclass(frozen=True)
class AgreementReport:
    rows: tuple[AgreementRow, ...]
    average: AgreementRow

    def to_dict(self) -> dict:
        def row(r: AgreementRow) -> dict:
            return {
                "kappa": r.kappa,
                "ci_lower": r.ci.lower,
                "ci_upper": r.ci.upper,
                "clamped": r.ci.clamped,
            }

        return {"per_label": {r.label: row(r) for r in self.rows}, "average": row(self.average)}


def agreement_report(
    ratings: Iterable[tuple[object, str, LabelSet]],
    level: float = 0.95,
    resamples: int = 1000,
    seed: int = 0,
    labels: Sequence[ContributionLabel] = ALL_LABELS,
) -> AgreementReport:
    """Per-label kappa with bootstrap CI, plus the unweighted label average.

    The average row averages the per-label kappas and interval bounds.
    """
    tables = agreement_tables(ratings, labels)
    rows = []
    for label in labels:
        table = tables[label]
        rows.append(AgreementRow(str(label), fleiss_kappa(table), kappa_ci(table, level, resamples, seed)))
    average = AgreementRow(
        "average",
        sum(r.kappa for r in rows) / len(rows),
        KappaCI(
            sum(r.ci.lower for r in rows) / len(rows),
            sum(r.ci.upper for r in rows) / len(rows),
            any(r.ci.clamped for r in rows),
        ),
    )
    return AgreementReport(tuple(rows), average)
