"""Paper corpus ingestion: load, validate, merge, deduplicate, segment.

The corpus format is UTF-8 JSONL, one paper per line, with fields
``paper_id`` (required), ``title``, ``abstract`` (required), ``venue``,
``year``, ``month`` and ``citation_count``. Processed corpora written by
this module additionally carry ``sentences`` and ``event_keys`` so a
save/load round trip preserves every record field bit-exactly.

Deduplication targets papers listed under more than one event of the
same joint conference: two records with the same normalized title and
the same year collapse into one whose ``event_keys`` is the union of the
raw venue strings seen.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field as dataclass_field

from .bibtex import BibEntry
from .errors import DataError
from .segment import segment_sentences
from .venues import Venue, VenueId, normalize_venue

logger = logging.getLogger(__name__)

YEAR_MIN = 1900
YEAR_MAX = 2100


@dataclass
class PaperRecord:
    paper_id: str
    title: str = ""
    abstract: str = ""
    sentences: list[str] = dataclass_field(default_factory=list)
    venue: str = ""
    year: int | None = None
    month: int | None = None
    citation_count: int | None = None
    event_keys: set[str] = dataclass_field(default_factory=set)

    @property
    def venue_id(self) -> VenueId:
        return normalize_venue(self.venue)

    @property
    def canonical_venue(self) -> Venue:
        return self.venue_id.canonical


@dataclass
class IngestReport:
    """Counters surfaced by the ingest pipeline."""

    loaded: int = 0
    deduped: int = 0
    unresolved_metadata: int = 0
    empty_abstracts: int = 0
    invalid_years: int = 0
    filtered_out: int = 0

    def to_dict(self) -> dict[str, int]:
        return {
            "loaded": self.loaded,
            "deduped": self.deduped,
            "unresolved_metadata": self.unresolved_metadata,
            "empty_abstracts": self.empty_abstracts,
            "invalid_years": self.invalid_years,
            "filtered_out": self.filtered_out,
        }


def _coerce_year(value, report: IngestReport | None) -> int | None:
    """Years outside [1900, 2100] or unparseable count as missing."""
    if value is None:
        return None
    try:
        year = int(value)
    except (TypeError, ValueError):
        year = None
    if year is None or not YEAR_MIN <= year <= YEAR_MAX:
        if report is not None:
            report.invalid_years += 1
        return None
    return year


def _record_from_obj(obj: dict, line_no: int, report: IngestReport | None) -> PaperRecord:
    for required in ("paper_id", "abstract"):
        if required not in obj:
            raise DataError(f"line {line_no}: missing field {required}")
    if not isinstance(obj["paper_id"], str) or not obj["paper_id"]:
        raise DataError(f"line {line_no}: paper_id must be a non-empty string")
    citation = obj.get("citation_count")
    if citation is not None:
        if not isinstance(citation, int) or citation < 0:
            raise DataError(f"line {line_no}: citation_count must be a non-negative integer")
    return PaperRecord(
        paper_id=obj["paper_id"],
        title=obj.get("title") or "",
        abstract=obj.get("abstract") or "",
        sentences=list(obj.get("sentences") or []),
        venue=obj.get("venue") or "",
        year=_coerce_year(obj.get("year"), report),
        month=obj.get("month"),
        citation_count=citation,
        event_keys=set(obj.get("event_keys") or []),
    )


def load_papers(path, report: IngestReport | None = None) -> list[PaperRecord]:
    """Load a paper-record JSONL file, preserving input order.

    Raises DataError naming the line number on a malformed line, and on
    a duplicate paper_id within the file.
    """
    records: list[PaperRecord] = []
    seen: set[str] = set()
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
            record = _record_from_obj(obj, line_no, report)
            if record.paper_id in seen:
                raise DataError(f"line {line_no}: duplicate paper_id {record.paper_id!r}")
            seen.add(record.paper_id)
            records.append(record)
    if report is not None:
        report.loaded += len(records)
    return records


def record_to_obj(record: PaperRecord) -> dict:
    obj = {
        "paper_id": record.paper_id,
        "title": record.title,
        "abstract": record.abstract,
        "venue": record.venue,
        "year": record.year,
        "month": record.month,
        "citation_count": record.citation_count,
        "sentences": record.sentences,
        "event_keys": sorted(record.event_keys),
    }
    return obj


def save_papers(records: list[PaperRecord], path) -> None:
    """Write records as JSONL; inverse of load_papers on every field."""
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record_to_obj(record), ensure_ascii=False) + "\n")


_NON_ALNUM = re.compile(r"[^a-z0-9]+")


def _canonical_identity(record: PaperRecord) -> tuple | None:
    """Dedup key: normalized title + year; None when either is missing."""
    title = _NON_ALNUM.sub("", record.title.lower())
    if not title or record.year is None:
        return None
    return (title, record.year)


def merge_and_dedup(
    papers: list[PaperRecord],
    meta: dict[str, BibEntry] | None = None,
    report: IngestReport | None = None,
) -> list[PaperRecord]:
    """Join metadata by paper_id, then collapse dual-listed papers.

    Metadata fills fields the record is missing (title, venue, year,
    month) and contributes its venue string to event_keys. Records
    whose key has no metadata are kept and counted as unresolved.
    Idempotent: a second application is a no-op.
    """
    joined: list[PaperRecord] = []
    for record in papers:
        record.event_keys = set(record.event_keys)
        if record.venue:
            record.event_keys.add(record.venue)
        if meta is not None:
            entry = meta.get(record.paper_id)
            if entry is None:
                if report is not None:
                    report.unresolved_metadata += 1
            else:
                if not record.title and entry.title:
                    record.title = entry.title
                if not record.venue and entry.venue:
                    record.venue = entry.venue
                if record.year is None and entry.year is not None:
                    record.year = _coerce_year(entry.year, report)
                if record.month is None:
                    record.month = entry.month
                if entry.venue:
                    record.event_keys.add(entry.venue)
        joined.append(record)

    by_identity: dict[tuple, PaperRecord] = {}
    result: list[PaperRecord] = []
    removed = 0
    for record in joined:
        identity = _canonical_identity(record)
        if identity is None or identity not in by_identity:
            if identity is not None:
                by_identity[identity] = record
            result.append(record)
            continue
        base = by_identity[identity]
        base.event_keys |= record.event_keys
        if base.citation_count is None:
            base.citation_count = record.citation_count
        if base.month is None:
            base.month = record.month
        if not base.abstract:
            base.abstract = record.abstract
        removed += 1
    if report is not None:
        report.deduped += removed
    return result


def ingest_corpus(
    papers_path,
    metadata: dict[str, BibEntry] | None = None,
    venue_allowlist: set[Venue] | None = None,
) -> tuple[list[PaperRecord], IngestReport]:
    """Full ingest pipeline: load, join, dedup, filter, segment."""
    report = IngestReport()
    records = load_papers(papers_path, report)
    records = merge_and_dedup(records, metadata, report)
    if venue_allowlist is not None:
        kept = [r for r in records if r.canonical_venue in venue_allowlist]
        report.filtered_out = len(records) - len(kept)
        records = kept
    for record in records:
        if record.abstract.strip():
            record.sentences = segment_sentences(record.abstract)
        else:
            record.sentences = []
            report.empty_abstracts += 1
    return records, report
