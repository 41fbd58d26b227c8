"""Acceptance gate: numbered end-to-end criteria with stated tolerances.

Each test prints one PASS line when its criterion holds. Criterion 5
runs only when CONTRIBSCOPE_DATA_DIR points at the released dataset
(corpus.jsonl, annotations.jsonl, agreement.jsonl); everything else is
self-contained.
"""

from __future__ import annotations

import itertools
import json
import math
import os
import random
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from contribscope.analysis import (
    citation_stats,
    distribution_similarity,
    jensen_shannon_divergence,
    pmi_matrix,
    PaperLabels,
)
from contribscope.annotations import load_annotations, select_split, split_corpus
from contribscope.cli import EXIT_OK, main
from contribscope.features import FeatureHasher
from contribscope.fixtures import (
    DEDUP_DUAL_LISTED,
    DEDUP_TOTAL_RECORDS,
    DEDUP_UNIQUE_RECORDS,
    make_annotated_papers,
    make_dedup_corpus,
)
from contribscope.ingest import load_papers, merge_and_dedup, save_papers
from contribscope.annotations import corpus_stats
from contribscope.metrics import (
    agreement_report,
    decision_vector,
    fleiss_kappa,
    macro_prf1,
    mcnemar,
)
from contribscope.model import (
    logistic_loss,
    logistic_loss_and_grad,
    random_predict,
    train_model,
)
from contribscope.outputs import sha256_file
from contribscope.taxonomy import ALL_LABELS
from contribscope.venues import Venue


def _report(line: str) -> None:
    print(line, flush=True)


# ------------------------------------------------------------ oracles


def _oracle_macro(gold, pred):
    ps, rs, fs = [], [], []
    for label in ALL_LABELS:
        tp = sum(1 for g, p in zip(gold, pred) if label in g and label in p)
        fp = sum(1 for g, p in zip(gold, pred) if label not in g and label in p)
        fn = sum(1 for g, p in zip(gold, pred) if label in g and label not in p)
        p = Fraction(tp, tp + fp) if tp + fp else Fraction(0)
        r = Fraction(tp, tp + fn) if tp + fn else Fraction(0)
        fs.append(2 * p * r / (p + r) if p + r else Fraction(0))
        ps.append(p)
        rs.append(r)
    k = len(ALL_LABELS)
    return float(sum(ps) / k), float(sum(rs) / k), float(sum(fs) / k)


def _oracle_fleiss(table):
    rows = [[int(x) for x in row] for row in table]
    n = sum(rows[0])
    p_bar = Fraction(
        sum(sum(math.comb(c, 2) for c in row) for row in rows),
        len(rows) * math.comb(n, 2),
    )
    total = n * len(rows)
    p_e = sum(
        Fraction(sum(row[j] for row in rows), total) ** 2 for j in range(len(rows[0]))
    )
    if p_e == 1:
        return 1.0
    return float((p_bar - p_e) / (1 - p_e))


def _oracle_jsd(p, q):
    def kl(a, b):
        return sum(x * math.log2(x / y) for x, y in zip(a, b) if x > 0)

    m = [(x + y) / 2 for x, y in zip(p, q)]
    return 0.5 * kl(p, m) + 0.5 * kl(q, m)


def _random_sets(rng, n, rate=0.3):
    return [
        frozenset(label for label in ALL_LABELS if rng.random() < rate)
        for _ in range(n)
    ]


# ------------------------------------------------------- criterion 1


def test_criterion_1_metric_oracles():
    """Five metric families vs brute-force oracles, 1000 instances each."""
    started = time.monotonic()
    rng = random.Random(1001)

    for _ in range(1000):  # fleiss
        n_items, n_raters, n_cats = rng.randint(2, 12), rng.randint(2, 5), rng.randint(2, 4)
        table = []
        for _ in range(n_items):
            row = [0] * n_cats
            for _ in range(n_raters):
                row[rng.randrange(n_cats)] += 1
            table.append(row)
        assert fleiss_kappa(np.array(table, dtype=float)) == pytest.approx(
            _oracle_fleiss(table), abs=1e-9
        )

    for _ in range(1000):  # macro P/R/F1
        n = rng.randint(1, 20)
        gold, pred = _random_sets(rng, n), _random_sets(rng, n)
        scores = macro_prf1(gold, pred)
        p, r, f = _oracle_macro(gold, pred)
        assert scores.precision == pytest.approx(p, abs=1e-9)
        assert scores.recall == pytest.approx(r, abs=1e-9)
        assert scores.f1 == pytest.approx(f, abs=1e-9)

    checked = 0
    while checked < 1000:  # PMI
        statements = _random_sets(rng, rng.randint(1, 25))
        if not any(statements):
            continue
        checked += 1
        matrix = pmi_matrix(statements)
        nonempty = [ls for ls in statements if ls]
        n = len(nonempty)
        singles, pairs = Counter(), Counter()
        for ls in nonempty:
            singles.update(ls)
            pairs.update(itertools.product(ls, ls))
        for i, x in enumerate(ALL_LABELS):
            for j, y in enumerate(ALL_LABELS):
                if pairs[(x, y)] == 0:
                    assert not matrix.defined[i, j]
                else:
                    expected = math.log2(
                        pairs[(x, y)] * n / (singles[x] * singles[y])
                    )
                    assert matrix.pmi[i, j] == pytest.approx(expected, abs=1e-9)

    np_rng = np.random.default_rng(1002)
    for _ in range(1000):  # venue similarity (JSD complement)
        k = int(np_rng.integers(2, 9))
        p = np_rng.dirichlet(np.ones(k))
        q = np_rng.dirichlet(np.ones(k))
        assert distribution_similarity(p, q) == pytest.approx(
            1.0 - _oracle_jsd(list(p), list(q)), abs=1e-9
        )

    for trial in range(1000):  # citation mean/median
        n = rng.randint(1, 30)
        papers = [
            PaperLabels(
                paper_id=f"p{trial}_{i}",
                venue=Venue.ACL,
                year=2000,
                sentence_labels=(frozenset({rng.choice(ALL_LABELS)}),),
                citation_count=rng.randint(0, 400),
            )
            for i in range(n)
        ]
        stats = citation_stats(papers, as_of_year=2020)
        for row in stats.rows:
            cites = sorted(
                p.citation_count
                for p in papers
                if any(str(l) == row.label for l in p.label_union)
            )
            if not cites:
                assert row.n_papers == 0
                continue
            mid = len(cites) // 2
            median = float(cites[mid]) if len(cites) % 2 else (cites[mid - 1] + cites[mid]) / 2.0
            mean = float(Fraction(sum(cites), len(cites)))
            assert row.mean == pytest.approx(mean, abs=1e-9)
            assert row.median == pytest.approx(median, abs=1e-9)

    elapsed = time.monotonic() - started
    assert elapsed < 60.0
    _report(
        f"PASS criterion 1: 5 metric families matched brute-force oracles on "
        f"1000 instances each within 1e-9 ({elapsed:.1f}s)"
    )


# ------------------------------------------------------- criterion 2


def test_criterion_2_hand_computed_anchors():
    """Frozen hand-computed values at their stated tolerances."""
    kappa = fleiss_kappa(np.array([[2, 0], [1, 1], [1, 1], [0, 2]], dtype=float))
    assert kappa == 0.0

    similarity = distribution_similarity(np.array([1.0, 0.0]), np.array([0.5, 0.5]))
    assert similarity == pytest.approx(0.6887, abs=1e-4)

    correct_a = [True] * 10 + [True] * 3
    correct_b = [False] * 10 + [True] * 3
    _, p = mcnemar(correct_a, correct_b)
    assert p == pytest.approx(0.0044, abs=1e-4)

    from contribscope.taxonomy import ContributionLabel

    a, b = ContributionLabel.K_TASK, ContributionLabel.A_METHOD
    gold = [frozenset({a}), frozenset(), frozenset({b})]
    pred = [frozenset({a}), frozenset({a}), frozenset()]
    f1 = macro_prf1(gold, pred, labels=[a, b]).f1
    assert f1 == pytest.approx(1.0 / 3.0, abs=1e-9)

    _report(
        "PASS criterion 2: anchors hold (kappa 0.0 exact, similarity "
        f"{similarity:.6f}, mcnemar p {p:.6f}, toy macro-F1 {f1:.9f})"
    )


# ------------------------------------------------------- criterion 3


def test_criterion_3_gradient_check():
    """Analytic gradient vs central differences on 100 random problems."""
    started = time.monotonic()
    rng = random.Random(33)
    np_rng = np.random.default_rng(34)
    words = ["red", "green", "blue", "cyan", "teal", "plum", "gold"]
    worst = 0.0
    for _ in range(100):
        dim = rng.randint(8, 20)
        n = rng.randint(3, 15)
        hasher = FeatureHasher(dim=dim)
        texts = [
            " ".join(rng.choice(words) for _ in range(rng.randint(1, 6)))
            for _ in range(n)
        ]
        X = hasher.transform_matrix(texts)
        y = (np_rng.random(n) < 0.5).astype(np.float64)
        l2 = rng.choice([0.0, 1e-4, 1e-2])
        params = np_rng.normal(0.0, 1.0, size=dim + 1)
        _, analytic = logistic_loss_and_grad(params, X, y, l2)
        numeric = np.zeros_like(params)
        eps = 1e-6
        for i in range(len(params)):
            bumped = params.copy()
            bumped[i] += eps
            hi = logistic_loss(bumped, X, y, l2)
            bumped[i] -= 2 * eps
            lo = logistic_loss(bumped, X, y, l2)
            numeric[i] = (hi - lo) / (2 * eps)
        rel = float(
            np.linalg.norm(numeric - analytic)
            / max(np.linalg.norm(numeric), np.linalg.norm(analytic))
        )
        worst = max(worst, rel)
        assert rel < 1e-4
    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    _report(
        f"PASS criterion 3: gradient matched central differences on 100 "
        f"instances (worst relative error {worst:.2e}, {elapsed:.1f}s)"
    )


# ------------------------------------------------------- criterion 4


def test_criterion_4_separable_fixture_learning():
    """Keyword-rule fixture: high held-out macro-F1, far above random."""
    started = time.monotonic()
    papers, rows = make_annotated_papers(n_papers=120, seed=42)
    assert len(rows) >= 500

    manifest = split_corpus([p.paper_id for p in papers], seed=42)
    train_rows = select_split(rows, manifest, "train")
    test_rows = select_split(rows, manifest, "test")
    assert train_rows and test_rows

    model, _ = train_model([r.text for r in train_rows], [r.labels for r in train_rows])
    gold = [r.labels for r in test_rows]
    pred = model.predict([r.text for r in test_rows])
    baseline = random_predict(len(test_rows), seed=42)

    model_f1 = macro_prf1(gold, pred).f1
    baseline_f1 = macro_prf1(gold, baseline).f1
    _, p = mcnemar(decision_vector(gold, pred), decision_vector(gold, baseline))

    elapsed = time.monotonic() - started
    assert model_f1 >= 0.95
    assert model_f1 - baseline_f1 >= 0.30
    assert p < 0.001
    assert elapsed < 60.0
    _report(
        f"PASS criterion 4: held-out macro-F1 {model_f1:.3f} vs random "
        f"{baseline_f1:.3f} (gap {model_f1 - baseline_f1:.3f}), mcnemar "
        f"p {p:.2e} on {len(test_rows)} sentences ({elapsed:.1f}s)"
    )


# ------------------------------------------------------- criterion 5


TABLE_SHARES = {
    "k-dataset": 5.1,
    "k-language": 4.0,
    "k-method": 12.6,
    "k-people": 9.2,
    "k-task": 36.1,
    "a-dataset": 2.2,
    "a-method": 27.2,
    "a-task": 3.6,
}

CITATION_TABLE = {
    # label: (n_papers, mean, median) for the five-year-mature ACL'18 slice
    "k-dataset": (219, 121.1, 56.0),
    "k-language": (193, 107.1, 53.0),
    "k-method": (280, 127.8, 56.0),
    "k-people": (119, 109.5, 54.0),
    "k-task": (328, 115.7, 55.0),
    "a-dataset": (154, 137.7, 64.0),
    "a-method": (310, 122.2, 58.0),
    "a-task": (270, 116.0, 56.0),
}


def test_criterion_5_released_dataset_reproduction():
    """Published statistics, agreement and citation figures, when data is present."""
    data_dir = os.environ.get("CONTRIBSCOPE_DATA_DIR")
    if not data_dir:
        pytest.skip("CONTRIBSCOPE_DATA_DIR not set; released dataset not available")
    root = Path(data_dir)
    for name in ("corpus.jsonl", "annotations.jsonl", "agreement.jsonl"):
        if not (root / name).exists():
            pytest.skip(f"released dataset incomplete: {name} missing")

    papers = load_papers(root / "corpus.jsonl")
    rows = load_annotations(root / "annotations.jsonl", papers=papers)
    report = corpus_stats(rows, papers=papers)
    assert report.n_statements == 5890
    assert report.mean_sentences_per_paper == pytest.approx(5.42, abs=0.1)
    assert report.mean_statements_per_paper == pytest.approx(2.95, abs=0.1)
    assert report.multi_label_pct == pytest.approx(57.6, abs=0.1)
    for label, share in TABLE_SHARES.items():
        assert report.label_share_pct[label] == pytest.approx(share, abs=0.1)

    dual = load_annotations(root / "agreement.jsonl")
    triples = [((r.paper_id, r.sentence_index), r.annotator_id, r.labels) for r in dual]
    agreement = agreement_report(triples, level=0.95, resamples=1000, seed=42)
    assert agreement.average.kappa == pytest.approx(0.71, abs=0.01)
    assert agreement.average.ci.lower == pytest.approx(0.60, abs=0.03)
    assert agreement.average.ci.upper == pytest.approx(0.82, abs=0.03)

    by_sentence = {(r.paper_id, r.sentence_index): r.labels for r in rows}
    labeled = []
    for paper in papers:
        sentence_labels = tuple(
            by_sentence.get((paper.paper_id, i), frozenset())
            for i in range(len(paper.sentences))
        )
        labeled.append(
            PaperLabels(
                paper_id=paper.paper_id,
                venue=paper.canonical_venue,
                year=paper.year,
                sentence_labels=sentence_labels,
                citation_count=paper.citation_count,
            )
        )
    slice_stats = citation_stats(labeled, venue=Venue.ACL, year=2018, mature_only=True)
    assert slice_stats.n_considered == 352
    by_label = {r.label: r for r in slice_stats.rows}
    for label, (n_papers, mean, median) in CITATION_TABLE.items():
        assert by_label[label].n_papers == n_papers
        assert by_label[label].mean == pytest.approx(mean, abs=0.1)
        assert by_label[label].median == pytest.approx(median, abs=0.1)

    _report("PASS criterion 5: released-dataset statistics reproduced")


# ------------------------------------------------------- criterion 6


def test_criterion_6_pipeline_determinism(tmp_path):
    """Repeated full run on a 30k corpus is byte-identical, under 5 minutes."""
    started = time.monotonic()
    corpus_path = tmp_path / "papers.jsonl"
    save_papers(make_dedup_corpus(seed=0), corpus_path)

    fixture_dir = tmp_path / "fixture"
    assert main(["fixture", "--papers", "80", "--out", str(fixture_dir), "--seed", "5"]) == EXIT_OK
    train_dir = tmp_path / "train"
    assert (
        main(
            [
                "train",
                "--input", str(fixture_dir / "annotations.jsonl"),
                "--dim", str(2**16),
                "--epochs", "120",
                "--out", str(train_dir),
            ]
        )
        == EXIT_OK
    )

    out_dirs = {
        "ingest": tmp_path / "ingest",
        "predict": tmp_path / "predict",
        "pmi": tmp_path / "pmi",
        "trends": tmp_path / "trends",
        "venues": tmp_path / "venues",
        "converge": tmp_path / "converge",
        "diversity": tmp_path / "diversity",
        "citations": tmp_path / "citations",
    }

    def run_pipeline():
        assert (
            main(["ingest", "--input", str(corpus_path), "--out", str(out_dirs["ingest"])])
            == EXIT_OK
        )
        corpus = out_dirs["ingest"] / "corpus.jsonl"
        assert (
            main(
                [
                    "predict",
                    "--input", str(corpus),
                    "--model", str(train_dir / "model.bin"),
                    "--out", str(out_dirs["predict"]),
                ]
            )
            == EXIT_OK
        )
        predictions = out_dirs["predict"] / "predictions.jsonl"
        for analysis in ("pmi", "trends", "venues", "converge", "diversity", "citations"):
            argv = [
                "analyze", analysis,
                "--input", str(corpus),
                "--predictions", str(predictions),
                "--out", str(out_dirs[analysis]),
            ]
            if analysis == "trends":
                argv += ["--window", "3"]
            assert main(argv) == EXIT_OK

    def snapshot():
        digests = {}
        for out in out_dirs.values():
            for path in sorted(out.iterdir()):
                digests[str(path.relative_to(tmp_path))] = sha256_file(path)
        return digests

    run_pipeline()
    first = snapshot()
    run_pipeline()
    second = snapshot()

    elapsed = time.monotonic() - started
    assert first == second
    assert len(first) >= 20
    assert elapsed < 300.0
    _report(
        f"PASS criterion 6: {len(first)} artifacts byte-identical across "
        f"repeated runs on a {DEDUP_TOTAL_RECORDS}-record corpus ({elapsed:.1f}s)"
    )


# ------------------------------------------------------- criterion 7


def test_criterion_7_dedup_29010_to_28937():
    """Dual-listing collapse on the constructed 29,010-record corpus."""
    papers = make_dedup_corpus(seed=0)
    assert len(papers) == DEDUP_TOTAL_RECORDS == 29_010
    merged = merge_and_dedup(papers)
    assert len(merged) == DEDUP_UNIQUE_RECORDS == 28_937
    dual = [p for p in merged if len(p.event_keys) > 1]
    assert len(dual) == DEDUP_DUAL_LISTED == 73
    assert all(p.year == 1997 for p in dual)
    _report(
        f"PASS criterion 7: {DEDUP_TOTAL_RECORDS} records deduplicated to "
        f"{len(merged)} with {len(dual)} dual-listed entries"
    )
