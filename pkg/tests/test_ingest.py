from __future__ import annotations

import json

import pytest

from contribscope.bibtex import BibEntry
from contribscope.errors import DataError
from contribscope.fixtures import make_annotated_papers, make_dedup_corpus
from contribscope.ingest import (
    IngestReport,
    PaperRecord,
    ingest_corpus,
    load_papers,
    merge_and_dedup,
    save_papers,
)
from contribscope.segment import segment_sentences
from contribscope.venues import Venue


def _write_jsonl(path, objs):
    path.write_text("\n".join(json.dumps(o) for o in objs) + "\n", encoding="utf-8")


def _minimal(paper_id, **extra):
    obj = {"paper_id": paper_id, "abstract": "Something happened."}
    obj.update(extra)
    return obj


def test_three_valid_lines_keep_order(tmp_path):
    path = tmp_path / "papers.jsonl"
    _write_jsonl(path, [_minimal("a"), _minimal("b"), _minimal("c")])
    records = load_papers(path)
    assert [r.paper_id for r in records] == ["a", "b", "c"]


def test_missing_abstract_error_names_line(tmp_path):
    path = tmp_path / "papers.jsonl"
    _write_jsonl(path, [_minimal("a"), {"paper_id": "b"}, _minimal("c")])
    with pytest.raises(DataError) as err:
        load_papers(path)
    assert str(err.value) == "line 2: missing field abstract"


def test_duplicate_paper_id_is_an_error(tmp_path):
    path = tmp_path / "papers.jsonl"
    _write_jsonl(path, [_minimal("a"), _minimal("a")])
    with pytest.raises(DataError) as err:
        load_papers(path)
    assert "line 2" in str(err.value)
    assert "'a'" in str(err.value)


def test_invalid_json_error_names_line(tmp_path):
    path = tmp_path / "papers.jsonl"
    path.write_text('{"paper_id": "a", "abstract": "x."}\nnot json\n', encoding="utf-8")
    with pytest.raises(DataError) as err:
        load_papers(path)
    assert str(err.value).startswith("line 2:")


def test_fixture_count_matches_line_count(tmp_path):
    papers, _ = make_annotated_papers(n_papers=1995, seed=1)
    path = tmp_path / "papers.jsonl"
    save_papers(papers, path)
    n_lines = sum(1 for _ in open(path, encoding="utf-8"))
    assert n_lines == 1995
    assert len(load_papers(path)) == 1995


def test_save_load_round_trip_is_bit_exact(tmp_path):
    papers, _ = make_annotated_papers(n_papers=25, seed=3)
    papers[0].event_keys = {"EACL", "ACL"}
    papers[1].year = None
    first = tmp_path / "first.jsonl"
    second = tmp_path / "second.jsonl"
    save_papers(papers, first)
    save_papers(load_papers(first), second)
    assert first.read_bytes() == second.read_bytes()


def test_year_outside_window_counts_as_invalid(tmp_path):
    path = tmp_path / "papers.jsonl"
    _write_jsonl(path, [_minimal("a", year=1850), _minimal("b", year=2020), _minimal("c", year="n/a")])
    report = IngestReport()
    records = load_papers(path, report)
    assert records[0].year is None
    assert records[1].year == 2020
    assert records[2].year is None
    assert report.invalid_years == 2


def test_negative_citation_count_rejected(tmp_path):
    path = tmp_path / "papers.jsonl"
    _write_jsonl(path, [_minimal("a", citation_count=-1)])
    with pytest.raises(DataError):
        load_papers(path)


def test_metadata_join_fills_missing_fields():
    papers = [PaperRecord(paper_id="p1", abstract="A result.")]
    meta = {
        "p1": BibEntry(
            key="p1",
            entry_type="inproceedings",
            fields={"title": "Filled In", "booktitle": "EACL", "year": "1997", "month": "jul"},
        )
    }
    report = IngestReport()
    merged = merge_and_dedup(papers, meta, report)
    record = merged[0]
    assert record.title == "Filled In"
    assert record.venue == "EACL"
    assert record.year == 1997
    assert record.month == 7
    assert "EACL" in record.event_keys
    assert report.unresolved_metadata == 0


def test_unmatched_metadata_counted_not_fatal():
    papers = [PaperRecord(paper_id="p1", abstract="A result.")]
    report = IngestReport()
    merged = merge_and_dedup(papers, {}, report)
    assert len(merged) == 1
    assert report.unresolved_metadata == 1


def test_dual_listing_collapses_with_event_key_union():
    shared = dict(title="One Paper Twice", abstract="Text here.", year=1997)
    papers = [
        PaperRecord(paper_id="acl-1", venue="ACL-1997", **shared),
        PaperRecord(paper_id="eacl-1", venue="EACL-1997", **shared),
    ]
    merged = merge_and_dedup(papers)
    assert len(merged) == 1
    assert merged[0].paper_id == "acl-1"
    assert merged[0].event_keys == {"ACL-1997", "EACL-1997"}


def test_disjoint_records_pass_through():
    papers = [
        PaperRecord(paper_id="a", title="T one", abstract="x.", year=2000),
        PaperRecord(paper_id="b", title="T two", abstract="y.", year=2000),
    ]
    assert len(merge_and_dedup(papers)) == 2


def test_title_normalization_drives_identity():
    papers = [
        PaperRecord(paper_id="a", title="Deep-Learning: A Survey!", abstract="x.", year=2019),
        PaperRecord(paper_id="b", title="deep learning a survey", abstract="y.", year=2019),
        PaperRecord(paper_id="c", title="deep learning a survey", abstract="z.", year=2020),
    ]
    merged = merge_and_dedup(papers)
    assert [r.paper_id for r in merged] == ["a", "c"]


def test_missing_title_or_year_never_collapses():
    papers = [
        PaperRecord(paper_id="a", title="", abstract="x.", year=1997),
        PaperRecord(paper_id="b", title="", abstract="y.", year=1997),
        PaperRecord(paper_id="c", title="Same", abstract="x.", year=None),
        PaperRecord(paper_id="d", title="Same", abstract="y.", year=None),
    ]
    assert len(merge_and_dedup(papers)) == 4


def test_merge_and_dedup_is_idempotent():
    papers = make_dedup_corpus(seed=2, n_unique=300, n_dual=20)
    assert len(papers) == 320
    once = merge_and_dedup(papers)
    twice = merge_and_dedup(once)
    assert len(once) == 300
    assert [r.paper_id for r in twice] == [r.paper_id for r in once]
    assert [r.event_keys for r in twice] == [r.event_keys for r in once]


def test_dedup_corpus_shape():
    papers = make_dedup_corpus(seed=4, n_unique=500, n_dual=30)
    assert len(papers) == 530
    assert len(merge_and_dedup(papers)) == 500


def test_ingest_pipeline_segments_and_counts(tmp_path):
    path = tmp_path / "papers.jsonl"
    _write_jsonl(
        path,
        [
            _minimal("a", abstract="First point. Second point.", venue="ACL", year=2020),
            _minimal("b", abstract="", venue="EMNLP", year=2021),
        ],
    )
    records, report = ingest_corpus(path)
    assert records[0].sentences == ["First point.", "Second point."]
    assert records[1].sentences == []
    assert report.loaded == 2
    assert report.empty_abstracts == 1
    assert set(report.to_dict()) >= {"loaded", "deduped", "unresolved_metadata", "empty_abstracts"}


def test_ingest_venue_allowlist(tmp_path):
    path = tmp_path / "papers.jsonl"
    _write_jsonl(
        path,
        [
            _minimal("a", venue="ACL 2020", year=2020),
            _minimal("b", venue="Some Workshop", year=2020),
        ],
    )
    records, report = ingest_corpus(path, venue_allowlist={Venue.ACL})
    assert [r.paper_id for r in records] == ["a"]
    assert report.filtered_out == 1


def test_segmented_fixture_abstracts_reassemble():
    papers, _ = make_annotated_papers(n_papers=40, seed=9)
    for paper in papers:
        sentences = segment_sentences(paper.abstract)
        # fixture abstracts are already whitespace-normalized
        assert " ".join(sentences) == paper.abstract
