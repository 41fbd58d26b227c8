"""A small BibTeX reader for bibliographic metadata.

Handles the common shape of bibliography exports: ``@type{key, field =
{value}, ...}`` entries with brace- or quote-delimited values and bare
month/year tokens. Field values keep their inner braces verbatim; only
the outer delimiters are stripped. ``@comment``, ``@preamble`` and
``@string`` blocks are skipped. This is not a full BibTeX
implementation (no macro expansion, no ``#`` concatenation).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

from .errors import BibtexError

logger = logging.getLogger(__name__)

_SKIPPED_TYPES = {"comment", "preamble", "string"}

_MONTHS = {
    "jan": 1, "feb": 2, "mar": 3, "apr": 4, "may": 5, "jun": 6,
    "jul": 7, "aug": 8, "sep": 9, "oct": 10, "nov": 11, "dec": 12,
}


@dataclass
class BibEntry:
    key: str
    entry_type: str
    fields: dict[str, str] = field(default_factory=dict)

    @property
    def title(self) -> str | None:
        return self.fields.get("title")

    @property
    def venue(self) -> str | None:
        """The venue string: booktitle for proceedings, else journal."""
        return self.fields.get("booktitle") or self.fields.get("journal")

    @property
    def year(self) -> int | None:
        raw = self.fields.get("year", "")
        match = re.search(r"\d{4}", raw)
        return int(match.group()) if match else None

    @property
    def month(self) -> int | None:
        raw = self.fields.get("month", "").strip().lower()
        if not raw:
            return None
        if raw.isdigit():
            value = int(raw)
            return value if 1 <= value <= 12 else None
        return _MONTHS.get(raw[:3])


def _skip_ws(text: str, pos: int, end: int) -> int:
    while pos < end and text[pos].isspace():
        pos += 1
    return pos


def _read_braced(text: str, pos: int) -> tuple[str, int]:
    """Read a {...} group starting at pos; returns (inner text, position past the group)."""
    opened = pos
    depth = 0
    i = pos
    while i < len(text):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return text[pos + 1 : i], i + 1
        i += 1
    raise BibtexError(f"unbalanced braces: group opened at byte offset {opened} is never closed")


def _read_quoted(text: str, pos: int) -> tuple[str, int]:
    depth = 0
    i = pos + 1
    while i < len(text):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth < 0:
                raise BibtexError(f"unbalanced braces at byte offset {i}")
        elif text[i] == '"' and depth == 0:
            return text[pos + 1 : i], i + 1
        i += 1
    raise BibtexError(f"unterminated quoted value at byte offset {pos}")


def _read_bare(text: str, pos: int, end: int) -> tuple[str, int]:
    i = pos
    while i < end and text[i] != "," and not text[i].isspace():
        i += 1
    return text[pos:i], i


def parse_bibtex(text: str) -> list[BibEntry]:
    """Parse BibTeX source into entries, in file order."""
    entries: list[BibEntry] = []
    pos = 0
    n = len(text)
    while pos < n:
        at = text.find("@", pos)
        if at < 0:
            break
        i = _skip_ws(text, at + 1, n)
        start = i
        while i < n and (text[i].isalpha() or text[i] == "_"):
            i += 1
        entry_type = text[start:i].lower()
        i = _skip_ws(text, i, n)
        if not entry_type or i >= n or text[i] != "{":
            pos = at + 1
            continue
        _, end = _read_braced(text, i)
        if entry_type not in _SKIPPED_TYPES:
            entry = _parse_fields(text, i + 1, end - 1, entry_type)
            if entry is not None:
                entries.append(entry)
        pos = end
    return entries


def _parse_fields(text: str, lo: int, hi: int, entry_type: str) -> BibEntry | None:
    """Parse the key and field list of one entry body, text[lo:hi]."""
    comma = text.find(",", lo, hi)
    if comma < 0:
        key = text[lo:hi].strip()
        return BibEntry(key=key, entry_type=entry_type) if key else None
    entry = BibEntry(key=text[lo:comma].strip(), entry_type=entry_type)

    i = comma + 1
    while i < hi:
        i = _skip_ws(text, i, hi)
        if i >= hi:
            break
        if text[i] == ",":
            i += 1
            continue
        eq = text.find("=", i, hi)
        if eq < 0:
            break
        name = text[i:eq].strip().lower()
        i = _skip_ws(text, eq + 1, hi)
        if i >= hi:
            break
        if text[i] == "{":
            value, i = _read_braced(text, i)
        elif text[i] == '"':
            value, i = _read_quoted(text, i)
        else:
            value, i = _read_bare(text, i, hi)
        if name:
            entry.fields[name] = " ".join(value.split())
        i = _skip_ws(text, i, hi)
        if i < hi and text[i] == ",":
            i += 1
    return entry


def load_metadata(path) -> dict[str, BibEntry]:
    """Load a .bib file into a key -> entry map.

    Duplicate keys resolve last-wins with a logged warning.
    """
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    entries = parse_bibtex(text)
    result: dict[str, BibEntry] = {}
    for entry in entries:
        if entry.key in result:
            logger.warning("duplicate BibTeX key %r: keeping the later entry", entry.key)
        result[entry.key] = entry
    return result
