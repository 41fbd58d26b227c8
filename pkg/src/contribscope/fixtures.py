"""Deterministic synthetic corpora for tests and demos.

Sentences are built from a filler vocabulary plus one unique trigger
token per label, so the true label set of any generated sentence is
recomputable from its text alone (see rule_labels). The trigger and
filler vocabularies are disjoint, making the learning task separable.
All generators are pure functions of their seed.
"""

from __future__ import annotations

import random
from typing import Sequence

from .annotations import AnnotatedSentence
from .ingest import PaperRecord
from .taxonomy import ALL_LABELS, ContributionLabel, LabelSet

TRIGGERS: dict[ContributionLabel, str] = {
    ContributionLabel.K_DATASET: "imbalance",
    ContributionLabel.K_LANGUAGE: "vowel",
    ContributionLabel.K_METHOD: "overfitting",
    ContributionLabel.K_PEOPLE: "demographic",
    ContributionLabel.K_TASK: "saturation",
    ContributionLabel.A_DATASET: "corpus",
    ContributionLabel.A_METHOD: "algorithm",
    ContributionLabel.A_TASK: "benchmark",
}

FILLER_WORDS: tuple[str, ...] = (
    "we", "the", "of", "results", "show", "that", "models", "on", "this",
    "paper", "study", "evaluate", "with", "and", "for", "report", "present",
    "analysis", "approach", "performance", "improves", "across", "settings",
    "strong", "in", "our", "findings", "suggest", "large", "gains", "release",
    "new", "describe", "examine", "observe", "consistent", "effects",
)

assert not set(TRIGGERS.values()) & set(FILLER_WORDS)

VENUE_POOL: tuple[str, ...] = (
    "Annual Meeting of the Association for Computational Linguistics",
    "Proceedings of EMNLP",
    "NAACL-HLT",
    "EACL",
    "Findings of the Association for Computational Linguistics: EMNLP",
    "CoNLL",
    "Transactions of the Association for Computational Linguistics",
    "*SEM",
    "AACL-IJCNLP",
    "Computational Linguistics",
)


def rule_labels(text: str) -> LabelSet:
    """Ground-truth oracle: the labels whose trigger token occurs in the text."""
    tokens = set(text.lower().replace(".", " ").split())
    return frozenset(label for label, trigger in TRIGGERS.items() if trigger in tokens)


def _sample_label_set(rng: random.Random, null_rate: float, max_labels: int) -> LabelSet:
    if rng.random() < null_rate:
        return frozenset()
    k = rng.randint(1, max_labels)
    return frozenset(rng.sample(ALL_LABELS, k))


def make_sentence(rng: random.Random, labels: LabelSet) -> str:
    """One sentence whose rule_labels equals ``labels``.

    Capitalized first word and a plain terminal period keep round trips
    through the sentence segmenter exact.
    """
    words = [rng.choice(FILLER_WORDS) for _ in range(rng.randint(5, 10))]
    for label in sorted(labels, key=str):
        words.insert(rng.randint(1, len(words)), TRIGGERS[label])
    words[0] = words[0].capitalize()
    return " ".join(words) + "."


def make_labeled_sentences(
    n: int, seed: int, null_rate: float = 0.35, max_labels: int = 3
) -> list[tuple[str, LabelSet]]:
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        labels = _sample_label_set(rng, null_rate, max_labels)
        out.append((make_sentence(rng, labels), labels))
    return out


def make_annotated_papers(
    n_papers: int,
    seed: int,
    sentences_per_paper: tuple[int, int] = (4, 8),
    null_rate: float = 0.35,
    years: Sequence[int] = tuple(range(2015, 2025)),
) -> tuple[list[PaperRecord], list[AnnotatedSentence]]:
    """Papers with generated abstracts plus their gold sentence annotations."""
    rng = random.Random(seed)
    papers: list[PaperRecord] = []
    rows: list[AnnotatedSentence] = []
    for i in range(n_papers):
        paper_id = f"paper{i:05d}"
        sentences = []
        lo, hi = sentences_per_paper
        for j in range(rng.randint(lo, hi)):
            labels = _sample_label_set(rng, null_rate, 3)
            text = make_sentence(rng, labels)
            sentences.append(text)
            rows.append(
                AnnotatedSentence(paper_id=paper_id, sentence_index=j, text=text, labels=labels)
            )
        papers.append(
            PaperRecord(
                paper_id=paper_id,
                title=f"Generated study number {i}",
                abstract=" ".join(sentences),
                venue=VENUE_POOL[i % len(VENUE_POOL)],
                # year drawn, not cycled: venue-year pairs must overlap
                year=rng.choice(years),
                citation_count=rng.randint(0, 400),
            )
        )
    return papers, rows


DEDUP_TOTAL_RECORDS = 29_010
DEDUP_DUAL_LISTED = 73
DEDUP_UNIQUE_RECORDS = DEDUP_TOTAL_RECORDS - DEDUP_DUAL_LISTED


def make_dedup_corpus(
    seed: int = 0,
    n_unique: int = DEDUP_UNIQUE_RECORDS,
    n_dual: int = DEDUP_DUAL_LISTED,
    sentences_per_paper: tuple[int, int] = (3, 6),
) -> list[PaperRecord]:
    """A corpus where ``n_dual`` 1997 papers appear under two venues.

    The duplicate pairs share normalized title and year but differ in
    paper_id and venue string, mirroring papers listed under two events
    of a joint conference; everything else is unique.
    """
    if n_dual > n_unique:
        raise ValueError("cannot dual-list more papers than exist")
    rng = random.Random(seed)
    papers: list[PaperRecord] = []
    duplicates: list[PaperRecord] = []
    for i in range(n_unique):
        dual = i < n_dual
        year = 1997 if dual else 1980 + (i % 45)
        venue = "ACL" if dual else VENUE_POOL[i % len(VENUE_POOL)]
        lo, hi = sentences_per_paper
        sentences = [
            make_sentence(rng, _sample_label_set(rng, 0.35, 3)) for _ in range(rng.randint(lo, hi))
        ]
        title = f"Shared findings volume {i}" if dual else f"Distinct study number {i}"
        papers.append(
            PaperRecord(
                paper_id=f"rec{i:05d}",
                title=title,
                abstract=" ".join(sentences),
                venue=venue,
                year=year,
                citation_count=rng.randint(0, 400) if rng.random() > 0.02 else None,
            )
        )
        if dual:
            duplicates.append(
                PaperRecord(
                    paper_id=f"dup{i:05d}",
                    title=title,
                    abstract=" ".join(sentences),
                    venue="EACL",
                    year=year,
                    citation_count=None,
                )
            )
    papers.extend(duplicates)
    return papers


def make_agreement_ratings(
    n_items: int,
    n_raters: int,
    seed: int,
    flip_rate: float = 0.1,
    null_rate: float = 0.35,
) -> list[tuple[tuple[str, int], str, LabelSet]]:
    """(item, annotator, labels) triples with label-flip noise per rater."""
    rng = random.Random(seed)
    out = []
    for i in range(n_items):
        item = (f"paper{i:05d}", 0)
        truth = _sample_label_set(rng, null_rate, 3)
        for r in range(n_raters):
            noisy = set(truth)
            for label in ALL_LABELS:
                if rng.random() < flip_rate:
                    noisy.symmetric_difference_update({label})
            out.append((item, f"rater{r}", frozenset(noisy)))
    return out
