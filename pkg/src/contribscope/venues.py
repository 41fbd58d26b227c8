"""Normalization of raw venue strings onto a fixed set of canonical venues.

Raw strings in bibliographic data are noisy ("Proceedings of the 35th
Annual Meeting of the Association for Computational Linguistics",
"ACL-2017", "Findings of the Association for Computational Linguistics:
EMNLP 2020", ...). Every raw string maps to exactly one canonical venue;
anything unrecognized maps to OTHER. Matching is case-insensitive and
rule order matters: more specific venues (Findings, TACL) are checked
before the substrings they contain (ACL).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import DataError


class Venue(enum.Enum):
    ACL = "ACL"
    EMNLP = "EMNLP"
    NAACL = "NAACL"
    EACL = "EACL"
    AACL = "AACL"
    FINDINGS = "Findings"
    CONLL = "CoNLL"
    STARSEM = "*SEM"
    TACL = "TACL"
    CL = "CL"
    OTHER = "Other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class VenueId:
    canonical: Venue
    raw: str


# (venue, compiled pattern) pairs, tried in order; first match wins.
_RULES: tuple[tuple[Venue, re.Pattern], ...] = (
    (Venue.FINDINGS, re.compile(r"\bfindings\b")),
    (Venue.TACL, re.compile(r"\btacl\b|transactions of the association for computational linguistics")),
    (Venue.CONLL, re.compile(r"\bconll\b|computational natural language learning")),
    (Venue.STARSEM, re.compile(r"\*\s*sem\b|\bstarsem\b|lexical and computational semantics")),
    (Venue.NAACL, re.compile(r"\bnaacl\b|north american chapter")),
    (Venue.EACL, re.compile(r"\beacl\b|european chapter")),
    (Venue.AACL, re.compile(r"\baacl\b|asia-pacific chapter")),
    (Venue.EMNLP, re.compile(r"\bemnlp\b|empirical methods in natural language processing")),
    (Venue.ACL, re.compile(r"\bacl\b|association for computational linguistics")),
    # Bare journal name; must come after ACL so "... Association for
    # Computational Linguistics" is not mistaken for the CL journal.
    (Venue.CL, re.compile(r"^cl$|^computational linguistics\b")),
)


def normalize_venue(raw: str) -> VenueId:
    """Map a raw venue/event string to its canonical venue."""
    text = " ".join(raw.lower().split())
    for venue, pattern in _RULES:
        if pattern.search(text):
            return VenueId(venue, raw)
    return VenueId(Venue.OTHER, raw)


def parse_venue_name(name: str) -> Venue:
    """Parse a canonical venue name as used in CLI flags (case-insensitive)."""
    wanted = name.strip().lower()
    for venue in Venue:
        if venue.value.lower() == wanted or venue.name.lower() == wanted:
            return venue
    raise DataError(f"unknown venue {name!r}; valid: " + ", ".join(v.value for v in Venue))
