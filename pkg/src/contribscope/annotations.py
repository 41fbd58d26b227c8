"""Sentence-level contribution annotations: storage, splits, statistics.

An annotated sentence carries the abstract sentence text plus the set
of contribution labels assigned to it (possibly empty; empty means the
sentence states no contribution). Annotation files are UTF-8 JSONL
with fields ``paper_id``, ``sentence_index``, ``text`` and ``labels``,
plus ``annotator_id`` in multi-annotator files.

Splits are made at the paper level so no abstract straddles the
train/val/test boundary, and are fully determined by (ids, seed).
"""

from __future__ import annotations

import json
import random
from collections import Counter, defaultdict
from dataclasses import dataclass

from .errors import DataError
from .ingest import PaperRecord
from .taxonomy import ALL_LABELS, LabelSet, parse_label_set, render_label_set

TRAIN_FRACTION = 0.70
VAL_FRACTION = 0.15
MIN_SPLIT_PAPERS = 10


@dataclass(frozen=True)
class AnnotatedSentence:
    paper_id: str
    sentence_index: int
    text: str
    labels: LabelSet
    annotator_id: str | None = None

    @property
    def is_statement(self) -> bool:
        """A contribution statement is a sentence with at least one label."""
        return bool(self.labels)


def load_annotations(path, papers: list[PaperRecord] | None = None) -> list[AnnotatedSentence]:
    """Load annotated sentences, preserving input order.

    Raises DataError naming the line number on malformed lines, unknown
    labels, duplicate (paper, sentence, annotator) keys, and, when the
    segmented corpus is supplied, out-of-range sentence indices.
    """
    sentence_counts = None
    if papers is not None:
        sentence_counts = {p.paper_id: len(p.sentences) for p in papers}
    rows: list[AnnotatedSentence] = []
    seen: set[tuple[str, int, str | None]] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"line {line_no}: invalid JSON ({exc.msg})") from exc
            if not isinstance(obj, dict):
                raise DataError(f"line {line_no}: expected a JSON object")
            for required in ("paper_id", "sentence_index", "text", "labels"):
                if required not in obj:
                    raise DataError(f"line {line_no}: missing field {required}")
            index = obj["sentence_index"]
            if not isinstance(index, int) or index < 0:
                raise DataError(f"line {line_no}: sentence_index must be a non-negative integer")
            try:
                labels = parse_label_set(obj["labels"])
            except DataError as exc:
                raise DataError(f"line {line_no}: {exc}") from exc
            row = AnnotatedSentence(
                paper_id=obj["paper_id"],
                sentence_index=index,
                text=obj["text"],
                labels=labels,
                annotator_id=obj.get("annotator_id"),
            )
            key = (row.paper_id, row.sentence_index, row.annotator_id)
            if key in seen:
                raise DataError(f"line {line_no}: duplicate annotation for {key!r}")
            seen.add(key)
            if sentence_counts is not None:
                count = sentence_counts.get(row.paper_id)
                if count is not None and index >= count:
                    raise DataError(
                        f"line {line_no}: sentence_index {index} out of range for "
                        f"{row.paper_id} ({count} sentences)"
                    )
            rows.append(row)
    return rows


def save_annotations(rows: list[AnnotatedSentence], path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for row in rows:
            obj = {
                "paper_id": row.paper_id,
                "sentence_index": row.sentence_index,
                "text": row.text,
                "labels": render_label_set(row.labels),
            }
            if row.annotator_id is not None:
                obj["annotator_id"] = row.annotator_id
            handle.write(json.dumps(obj, ensure_ascii=False) + "\n")


@dataclass
class SplitManifest:
    seed: int
    train: list[str]
    val: list[str]
    test: list[str]

    PARTS = ("train", "val", "test")

    def part(self, name: str) -> list[str]:
        if name not in self.PARTS:
            raise DataError(f"unknown split part {name!r}; expected one of {self.PARTS}")
        return getattr(self, name)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "sizes": {name: len(self.part(name)) for name in self.PARTS},
            "train": self.train,
            "val": self.val,
            "test": self.test,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "SplitManifest":
        return cls(
            seed=obj["seed"], train=list(obj["train"]), val=list(obj["val"]), test=list(obj["test"])
        )


def split_corpus(paper_ids, seed: int) -> SplitManifest:
    """Split papers 70/15/15 deterministically.

    Sizes are floor(0.70 n) and floor(0.15 n), with the remainder going
    to test. Ids are deduplicated and sorted before the seeded shuffle,
    so the outcome depends only on the id set and the seed.
    """
    ids = sorted(set(paper_ids))
    if len(ids) < MIN_SPLIT_PAPERS:
        raise DataError(f"need at least {MIN_SPLIT_PAPERS} papers to split, got {len(ids)}")
    rng = random.Random(seed)
    rng.shuffle(ids)
    n = len(ids)
    n_train = int(TRAIN_FRACTION * n)
    n_val = int(VAL_FRACTION * n)
    return SplitManifest(
        seed=seed,
        train=ids[:n_train],
        val=ids[n_train : n_train + n_val],
        test=ids[n_train + n_val :],
    )


def select_split(rows: list[AnnotatedSentence], manifest: SplitManifest, part: str) -> list[AnnotatedSentence]:
    wanted = set(manifest.part(part))
    return [row for row in rows if row.paper_id in wanted]


@dataclass
class StatsReport:
    n_papers: int
    n_sentences: int
    n_statements: int
    mean_sentences_per_paper: float
    mean_statements_per_paper: float
    multi_label_pct: float
    label_counts: dict[str, int]
    label_share_pct: dict[str, float]  # of all label assignments; sums to 100
    venue_mean_sentences: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "n_papers": self.n_papers,
            "n_sentences": self.n_sentences,
            "n_statements": self.n_statements,
            "mean_sentences_per_paper": self.mean_sentences_per_paper,
            "mean_statements_per_paper": self.mean_statements_per_paper,
            "multi_label_pct": self.multi_label_pct,
            "label_counts": self.label_counts,
            "label_share_pct": self.label_share_pct,
            "venue_mean_sentences": self.venue_mean_sentences,
        }


def corpus_stats(
    rows: list[AnnotatedSentence], papers: list[PaperRecord] | None = None
) -> StatsReport:
    """Corpus summary: volume, multi-label rate, label shares.

    A statement is a sentence with at least one label. multi_label_pct
    is the percentage of statements carrying two or more labels; label
    shares are percentages of all label assignments (they sum to 100
    whenever any assignment exists). With the paper corpus supplied,
    mean sentence counts are also broken out per canonical venue.
    """
    papers_seen: set[str] = set()
    statements_per_paper: Counter[str] = Counter()
    label_counts: Counter[str] = Counter()
    n_statements = 0
    n_multi = 0
    for row in rows:
        papers_seen.add(row.paper_id)
        if row.is_statement:
            n_statements += 1
            statements_per_paper[row.paper_id] += 1
            if len(row.labels) > 1:
                n_multi += 1
            for label in row.labels:
                label_counts[str(label)] += 1
    n_papers = len(papers_seen)
    total_assignments = sum(label_counts.values())
    venue_mean: dict[str, float] = {}
    if papers is not None:
        by_venue: dict[str, list[int]] = defaultdict(list)
        annotated = {p.paper_id: p for p in papers if p.paper_id in papers_seen}
        sentences_of: Counter[str] = Counter(row.paper_id for row in rows)
        for paper_id, paper in annotated.items():
            by_venue[paper.canonical_venue.value].append(sentences_of[paper_id])
        venue_mean = {
            venue: sum(counts) / len(counts) for venue, counts in sorted(by_venue.items())
        }
    return StatsReport(
        n_papers=n_papers,
        n_sentences=len(rows),
        n_statements=n_statements,
        mean_sentences_per_paper=len(rows) / n_papers if n_papers else 0.0,
        mean_statements_per_paper=n_statements / n_papers if n_papers else 0.0,
        multi_label_pct=100.0 * n_multi / n_statements if n_statements else 0.0,
        label_counts={str(label): label_counts.get(str(label), 0) for label in ALL_LABELS},
        label_share_pct={
            str(label): (
                100.0 * label_counts.get(str(label), 0) / total_assignments
                if total_assignments
                else 0.0
            )
            for label in ALL_LABELS
        },
        venue_mean_sentences=venue_mean,
    )


def format_stats_text(report: StatsReport) -> str:
    """Aligned-column rendering of the stats report."""
    lines = [
        f"papers                {report.n_papers}",
        f"sentences             {report.n_sentences}",
        f"statements            {report.n_statements}",
        f"sentences per paper   {report.mean_sentences_per_paper:.2f}",
        f"statements per paper  {report.mean_statements_per_paper:.2f}",
        f"multi-label           {report.multi_label_pct:.1f}%",
        "",
        f"{'label':<12}  {'count':>6}  {'share':>7}",
    ]
    for label in ALL_LABELS:
        name = str(label)
        lines.append(
            f"{name:<12}  {report.label_counts[name]:>6}  {report.label_share_pct[name]:>6.1f}%"
        )
    if report.venue_mean_sentences:
        lines.append("")
        lines.append(f"{'venue':<12}  {'mean sentences':>14}")
        for venue, mean in report.venue_mean_sentences.items():
            lines.append(f"{venue:<12}  {mean:>14.2f}")
    return "\n".join(lines)
