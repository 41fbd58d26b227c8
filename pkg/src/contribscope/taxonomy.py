"""Contribution label schema: 5 knowledge subtypes and 3 artifact subtypes.

The hyphenated lowercase names (``k-task``, ``a-method``, ...) are the
canonical spelling in every file format, CLI flag, and API of this
package. A sentence's label set may be empty, which marks a
non-contribution sentence (Null).
"""

from __future__ import annotations

import enum
from typing import FrozenSet

from .errors import DataError


class Kind(enum.Enum):
    KNOWLEDGE = "knowledge"
    ARTIFACT = "artifact"


class ContributionLabel(enum.Enum):
    K_DATASET = "k-dataset"
    K_LANGUAGE = "k-language"
    K_METHOD = "k-method"
    K_PEOPLE = "k-people"
    K_TASK = "k-task"
    A_DATASET = "a-dataset"
    A_METHOD = "a-method"
    A_TASK = "a-task"

    @property
    def kind(self) -> Kind:
        return Kind.KNOWLEDGE if self.value.startswith("k-") else Kind.ARTIFACT

    def __str__(self) -> str:
        return self.value


# Canonical ordering: knowledge subtypes first, then artifact subtypes.
ALL_LABELS: tuple[ContributionLabel, ...] = (
    ContributionLabel.K_DATASET,
    ContributionLabel.K_LANGUAGE,
    ContributionLabel.K_METHOD,
    ContributionLabel.K_PEOPLE,
    ContributionLabel.K_TASK,
    ContributionLabel.A_DATASET,
    ContributionLabel.A_METHOD,
    ContributionLabel.A_TASK,
)

LabelSet = FrozenSet[ContributionLabel]

#: The empty label set, marking a non-contribution sentence.
NULL_LABELS: LabelSet = frozenset()

_BY_NAME = {label.value: label for label in ALL_LABELS}


def parse_label(text: str) -> ContributionLabel:
    """Parse a canonical hyphenated label name, case-insensitively."""
    label = _BY_NAME.get(text.strip().lower())
    if label is None:
        valid = ", ".join(l.value for l in ALL_LABELS)
        raise DataError(f"unknown label {text!r}; valid labels: {valid}")
    return label


def render_label(label: ContributionLabel) -> str:
    """Inverse of :func:`parse_label`."""
    return label.value


def labels_of_kind(kind: Kind) -> tuple[ContributionLabel, ...]:
    """All labels of one kind, in canonical order."""
    return tuple(label for label in ALL_LABELS if label.kind is kind)


def parse_label_set(names) -> LabelSet:
    """Parse a list of label names into a LabelSet (empty list -> Null)."""
    return frozenset(parse_label(name) for name in names)


def render_label_set(labels: LabelSet) -> list[str]:
    """Render a LabelSet as canonical names in canonical order."""
    return [label.value for label in ALL_LABELS if label in labels]
