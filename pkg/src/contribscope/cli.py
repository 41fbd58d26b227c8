"""Command-line entry point.

Every subcommand reads files, writes files under --out, and records a
run manifest (config echo, input digests, output digests, version) so
any run can be re-executed and checked byte for byte. Identical config
and inputs produce identical outputs; --randomize opts out by drawing
a fresh seed, which the manifest then records.

Exit codes: 0 ok, 1 usage error, 2 data error, 3 transport error.
Failures print a single JSON line to stderr.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from pathlib import Path

from . import __version__
from .analysis import (
    PaperLabels,
    citation_stats,
    diversity_to_rows,
    pmi_matrix,
    profiles_to_rows,
    unique_types_per_paper,
    venue_profiles,
    venue_similarity_series,
    yearly_type_share,
)
from .annotations import (
    SplitManifest,
    corpus_stats,
    format_stats_text,
    load_annotations,
    select_split,
    split_corpus,
)
from .bibtex import load_metadata
from .errors import ContribscopeError, DataError, TransportError
from .ingest import ingest_corpus, load_papers, save_papers
from .metrics import (
    agreement_report,
    decision_vector,
    exact_match,
    format_macro_table,
    macro_prf1,
    mcnemar,
)
from .model import ContributionModel, ModelConfig, random_predict, train_model
from .outputs import RunManifest, write_csv, write_json
from .prompts import Shot, template_for
from .remote import RemoteConfig, remote_classify
from .taxonomy import ALL_LABELS, LabelSet, parse_label, parse_label_set, render_label_set
from .venues import Venue, parse_venue_name

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_TRANSPORT = 3

DEFAULT_SEED = 42


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for data errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        _print_error("usage", message)
        raise SystemExit(EXIT_USAGE)


def _print_error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _config_echo(args) -> dict:
    config = {}
    for key, value in sorted(vars(args).items()):
        if key in ("func",):
            continue
        config[key] = str(value) if isinstance(value, Path) else value
    return config


def _manifest(args, command: str) -> RunManifest:
    return RunManifest(command=command, config=_config_echo(args), version=__version__)


def _effective_seed(args) -> int:
    if getattr(args, "randomize", False):
        seed = secrets.randbits(32)
        args.seed = seed  # recorded in the config echo
        return seed
    return args.seed


def _parse_venue_list(raw: str | None) -> set[Venue] | None:
    if raw is None:
        return None
    return {parse_venue_name(part) for part in raw.split(",") if part.strip()}


# ----------------------------------------------------------- ingest

def cmd_ingest(args) -> None:
    out = _out_dir(args)
    manifest = _manifest(args, "ingest")
    manifest.add_input(args.input)
    metadata = None
    if args.metadata is not None:
        metadata = load_metadata(args.metadata)
        manifest.add_input(args.metadata)
    allowlist = _parse_venue_list(args.venues)
    records, report = ingest_corpus(args.input, metadata, allowlist)
    corpus_path = out / "corpus.jsonl"
    save_papers(records, corpus_path)
    report_path = out / "ingest_report.json"
    write_json(report_path, report.to_dict())
    manifest.add_output(corpus_path)
    manifest.add_output(report_path)
    manifest.write(out / "ingest_manifest.json")
    print(f"ingested {len(records)} papers ({json.dumps(report.to_dict())})")


# ------------------------------------------------------------ stats

def cmd_stats(args) -> None:
    out = _out_dir(args)
    manifest = _manifest(args, "stats")
    manifest.add_input(args.input)
    papers = None
    if args.corpus is not None:
        papers = load_papers(args.corpus)
        manifest.add_input(args.corpus)
    rows = load_annotations(args.input, papers)
    report = corpus_stats(rows, papers)
    json_path = out / "stats.json"
    text_path = out / "stats.txt"
    write_json(json_path, report.to_dict())
    text_path.write_text(format_stats_text(report) + "\n", encoding="utf-8")
    manifest.add_output(json_path)
    manifest.add_output(text_path)
    manifest.write(out / "stats_manifest.json")
    print(format_stats_text(report))


# ------------------------------------------------------------ split

def cmd_split(args) -> None:
    out = _out_dir(args)
    seed = _effective_seed(args)
    manifest = _manifest(args, "split")
    manifest.add_input(args.input)
    rows = load_annotations(args.input)
    split = split_corpus({row.paper_id for row in rows}, seed)
    split_path = out / "split.json"
    write_json(split_path, split.to_dict())
    manifest.add_output(split_path)
    manifest.write(out / "split_manifest.json")
    sizes = {name: len(split.part(name)) for name in SplitManifest.PARTS}
    print(f"split {sum(sizes.values())} papers into {json.dumps(sizes)}")


# ------------------------------------------------------------ train

def cmd_train(args) -> None:
    out = _out_dir(args)
    seed = _effective_seed(args)
    manifest = _manifest(args, "train")
    manifest.add_input(args.input)
    rows = load_annotations(args.input)
    if args.split is not None:
        manifest.add_input(args.split)
        split = SplitManifest.from_dict(json.loads(Path(args.split).read_text(encoding="utf-8")))
        rows = select_split(rows, split, "train")
    config = ModelConfig(
        dim=args.dim, l2=args.l2, epochs=args.epochs, threshold=args.threshold, seed=seed
    )
    model, report = train_model([r.text for r in rows], [r.labels for r in rows], config)
    model_path = out / "model.bin"
    model.save(model_path)
    report_path = out / "train_report.json"
    write_json(
        report_path,
        {
            "n_sentences": report.n_sentences,
            "positives": report.positives,
            "final_losses": report.final_losses,
            "config": config.to_dict(),
        },
    )
    manifest.add_output(model_path)
    manifest.add_output(report_path)
    manifest.write(out / "train_manifest.json")
    print(f"trained on {report.n_sentences} sentences -> {model_path}")


# ---------------------------------------------------------- predict

def _load_shots(path) -> dict[str, list[Shot]]:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(obj, dict):
        raise DataError("shots file must be a JSON object keyed by label")
    shots: dict[str, list[Shot]] = {}
    for name, entries in obj.items():
        label = parse_label(name)
        shots[str(label)] = [
            Shot(text=e["text"], answer=str(e["answer"]).lower() == "yes") for e in entries
        ]
    return shots


def _write_predictions(path, records, label_sets, scores=None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        cursor = 0
        for record in records:
            for idx in range(len(record.sentences)):
                obj = {
                    "paper_id": record.paper_id,
                    "sentence_index": idx,
                    "labels": render_label_set(label_sets[cursor]),
                }
                if scores is not None:
                    obj["scores"] = {
                        str(label): round(float(scores[cursor][j]), 6)
                        for j, label in enumerate(ALL_LABELS)
                    }
                handle.write(json.dumps(obj, ensure_ascii=False) + "\n")
                cursor += 1


def cmd_predict(args) -> None:
    if (args.model is None) == (args.endpoint is None):
        raise DataError("predict needs exactly one of --model or --endpoint")
    out = _out_dir(args)
    manifest = _manifest(args, "predict")
    manifest.add_input(args.input)
    records = load_papers(args.input)
    texts = [s for record in records for s in record.sentences]
    report: dict = {"n_papers": len(records), "n_sentences": len(texts)}
    predictions_path = out / "predictions.jsonl"
    if args.model is not None:
        manifest.add_input(args.model)
        model = ContributionModel.load(args.model)
        scores = model.scores(texts)
        threshold = args.threshold if args.threshold is not None else model.config.threshold
        label_sets = model.predict(texts, threshold)
        report["threshold"] = threshold
        _write_predictions(predictions_path, records, label_sets, scores)
    else:
        templates = []
        shots = _load_shots(args.shots) if args.shots else {}
        for label in ALL_LABELS:
            templates.append(template_for(label, tuple(shots.get(str(label), ()))))
        config = RemoteConfig(
            endpoint=args.endpoint, timeout_ms=args.timeout_ms, retries=args.retries
        )
        result = remote_classify(config, texts, templates)
        report["abstains"] = result.abstains
        _write_predictions(predictions_path, records, result.label_sets)
        raw_path = out / "raw_responses.jsonl"
        with open(raw_path, "w", encoding="utf-8") as handle:
            for raw in result.raw:
                handle.write(json.dumps(raw, ensure_ascii=False) + "\n")
        manifest.add_output(raw_path)
    report_path = out / "predict_report.json"
    write_json(report_path, report)
    manifest.add_output(predictions_path)
    manifest.add_output(report_path)
    manifest.write(out / "predict_manifest.json")
    print(f"predicted {len(texts)} sentences across {len(records)} papers")


# ------------------------------------------------------------- eval

def cmd_eval(args) -> None:
    out = _out_dir(args)
    seed = _effective_seed(args)
    manifest = _manifest(args, "eval")
    manifest.add_input(args.input)
    manifest.add_input(args.model)
    rows = load_annotations(args.input)
    if args.split is not None:
        manifest.add_input(args.split)
        split = SplitManifest.from_dict(json.loads(Path(args.split).read_text(encoding="utf-8")))
        rows = select_split(rows, split, args.part)
    if not rows:
        raise DataError("no sentences selected for evaluation")
    model = ContributionModel.load(args.model)
    texts = [r.text for r in rows]
    gold = [r.labels for r in rows]
    threshold = args.threshold if args.threshold is not None else model.config.threshold
    pred = model.predict(texts, threshold)
    baseline = random_predict(len(texts), seed)
    model_scores = macro_prf1(gold, pred)
    baseline_scores = macro_prf1(gold, baseline)
    stat, p = mcnemar(decision_vector(gold, pred), decision_vector(gold, baseline))
    report = {
        "n_sentences": len(rows),
        "threshold": threshold,
        "model": model_scores.to_dict(),
        "random_baseline": baseline_scores.to_dict(),
        "mcnemar": {"vs": "random_baseline", "statistic": stat, "p": p},
    }
    if args.exact_match:
        report["exact_match"] = {
            "model": exact_match(gold, pred),
            "random_baseline": exact_match(gold, baseline),
        }
    json_path = out / "eval.json"
    write_json(json_path, report)
    text = (
        "model\n" + format_macro_table(model_scores)
        + "\n\nrandom baseline\n" + format_macro_table(baseline_scores)
        + f"\n\nmcnemar vs random: statistic {stat:.4f}, p {p:.6f}\n"
    )
    text_path = out / "eval.txt"
    text_path.write_text(text, encoding="utf-8")
    manifest.add_output(json_path)
    manifest.add_output(text_path)
    manifest.write(out / "eval_manifest.json")
    print(text)


# ------------------------------------------------------------ agree

def cmd_agree(args) -> None:
    out = _out_dir(args)
    seed = _effective_seed(args)
    manifest = _manifest(args, "agree")
    manifest.add_input(args.input)
    rows = load_annotations(args.input)
    if any(r.annotator_id is None for r in rows):
        raise DataError("agreement input must carry annotator_id on every line")
    ratings = [((r.paper_id, r.sentence_index), r.annotator_id, r.labels) for r in rows]
    report = agreement_report(ratings, level=args.level, resamples=args.resamples, seed=seed)
    json_path = out / "agreement.json"
    write_json(json_path, report.to_dict())
    lines = [f"{'label':<12}  {'kappa':>6}  {'ci':>16}"]
    for row in list(report.rows) + [report.average]:
        ci = f"({row.ci.lower:.2f}, {row.ci.upper:.2f})"
        lines.append(f"{row.label:<12}  {row.kappa:>6.2f}  {ci:>16}")
    text_path = out / "agreement.txt"
    text_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    manifest.add_output(json_path)
    manifest.add_output(text_path)
    manifest.write(out / "agree_manifest.json")
    print("\n".join(lines))


# ---------------------------------------------------------- analyze

def _label_sets_by_paper(path) -> dict[str, dict[int, LabelSet]]:
    table: dict[str, dict[int, LabelSet]] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"line {line_no}: invalid JSON ({exc.msg})") from exc
            for required in ("paper_id", "sentence_index", "labels"):
                if required not in obj:
                    raise DataError(f"line {line_no}: missing field {required}")
            table.setdefault(obj["paper_id"], {})[obj["sentence_index"]] = parse_label_set(
                obj["labels"]
            )
    return table


def _build_paper_labels(args, manifest: RunManifest) -> list[PaperLabels]:
    if (args.predictions is None) == (args.annotations is None):
        raise DataError("analyze needs exactly one of --predictions or --annotations")
    labels_path = args.predictions if args.predictions is not None else args.annotations
    manifest.add_input(args.input)
    manifest.add_input(labels_path)
    records = load_papers(args.input)
    by_paper = _label_sets_by_paper(labels_path)
    allowlist = _parse_venue_list(args.venues)
    papers: list[PaperLabels] = []
    for record in records:
        sentence_labels = by_paper.get(record.paper_id)
        if sentence_labels is None:
            continue
        if allowlist is not None and record.canonical_venue not in allowlist:
            continue
        ordered = tuple(sentence_labels[i] for i in sorted(sentence_labels))
        papers.append(
            PaperLabels(
                paper_id=record.paper_id,
                venue=record.canonical_venue,
                year=record.year,
                sentence_labels=ordered,
                citation_count=record.citation_count,
            )
        )
    if not papers:
        raise DataError("no papers with label sets to analyze")
    return papers


def cmd_analyze(args) -> None:
    out = _out_dir(args)
    manifest = _manifest(args, f"analyze-{args.analysis}")
    papers = _build_paper_labels(args, manifest)
    render = None
    written: list[Path] = []

    if args.analysis == "pmi":
        statements = [ls for p in papers for ls in p.sentence_labels]
        matrix = pmi_matrix(statements)
        write_csv(out / "pmi.csv", matrix.to_rows(), ["label_a", "label_b", "pmi", "defined", "joint_count"])
        write_json(out / "pmi.json", matrix.to_dict())
        written = [out / "pmi.csv", out / "pmi.json"]
        if args.figures:
            from . import figures

            render = lambda: figures.render_pmi_heatmap(matrix, out / "pmi.png")
    elif args.analysis == "trends":
        series = yearly_type_share(papers, window=args.window)
        trend_cols = ["year", "label", "share_pct", "n_papers"]
        if args.window is not None:
            trend_cols.append("share_pct_smoothed")
        write_csv(out / "trends.csv", series.to_rows(), trend_cols)
        write_json(out / "trends.json", series.to_dict())
        written = [out / "trends.csv", out / "trends.json"]
        if args.figures:
            from . import figures

            render = lambda: figures.render_trends(series, out / "trends.png", smoothed=args.window is not None)
    elif args.analysis == "venues":
        profiles = venue_profiles(papers)
        write_csv(out / "venue_profiles.csv", profiles_to_rows(profiles), ["venue", "label", "share", "n_papers"])
        write_json(out / "venue_profiles.json", {"profiles": [p.to_dict() for p in profiles]})
        written = [out / "venue_profiles.csv", out / "venue_profiles.json"]
        if args.figures:
            from . import figures

            render = lambda: figures.render_venue_profiles(profiles, out / "venue_profiles.png")
    elif args.analysis == "converge":
        series = venue_similarity_series(papers, parse_venue_name(args.reference))
        write_csv(out / "convergence.csv", series.to_rows(), ["venue", "year", "reference", "similarity"])
        write_json(out / "convergence.json", series.to_dict())
        written = [out / "convergence.csv", out / "convergence.json"]
        if args.figures:
            from . import figures

            render = lambda: figures.render_similarity(series, out / "convergence.png")
    elif args.analysis == "diversity":
        rows = unique_types_per_paper(papers)
        write_csv(out / "diversity.csv", diversity_to_rows(rows), ["venue", "year", "mean_unique_labels", "n_papers"])
        write_json(out / "diversity.json", {"rows": diversity_to_rows(rows)})
        written = [out / "diversity.csv", out / "diversity.json"]
        if args.figures:
            from . import figures

            render = lambda: figures.render_diversity(rows, out / "diversity.png")
    elif args.analysis == "citations":
        stats = citation_stats(
            papers,
            venue=parse_venue_name(args.venue) if args.venue else None,
            year=args.year,
            mature_only=args.maturity_filter,
        )
        write_csv(out / "citations.csv", stats.to_rows(), ["label", "n_papers", "mean", "median"])
        write_json(out / "citations.json", stats.to_dict())
        written = [out / "citations.csv", out / "citations.json"]
        if args.figures:
            from . import figures

            render = lambda: figures.render_citations(stats, out / "citations.png")
    else:  # pragma: no cover - argparse restricts choices
        raise DataError(f"unknown analysis {args.analysis!r}")

    if render is not None:
        render()
        png = written[0].with_suffix(".png")
        if png.exists():
            written.append(png)
    for path in written:
        manifest.add_output(path)
    manifest.write(out / f"analyze_{args.analysis}_manifest.json")
    print(f"wrote {', '.join(p.name for p in written)}")


# ---------------------------------------------------------- fixture

def cmd_fixture(args) -> None:
    from . import fixtures
    from .annotations import AnnotatedSentence, save_annotations
    from .ingest import PaperRecord

    out = _out_dir(args)
    seed = _effective_seed(args)
    manifest = _manifest(args, "fixture")
    papers, rows = fixtures.make_annotated_papers(args.papers, seed)
    raw = [
        PaperRecord(
            paper_id=p.paper_id,
            title=p.title,
            abstract=p.abstract,
            venue=p.venue,
            year=p.year,
            citation_count=p.citation_count,
        )
        for p in papers
    ]
    papers_path = out / "papers.jsonl"
    save_papers(raw, papers_path)
    annotations_path = out / "annotations.jsonl"
    save_annotations(rows, annotations_path)
    written = [papers_path, annotations_path]
    if args.raters > 1:
        ratings = fixtures.make_agreement_ratings(min(args.papers, 100), args.raters, seed)
        agreement_rows = [
            AnnotatedSentence(
                paper_id=item[0], sentence_index=item[1], text="", labels=labels, annotator_id=rater
            )
            for item, rater, labels in ratings
        ]
        agreement_path = out / "agreement.jsonl"
        save_annotations(agreement_rows, agreement_path)
        written.append(agreement_path)
    if args.dedup_demo:
        dedup_path = out / "dedup_papers.jsonl"
        save_papers(fixtures.make_dedup_corpus(seed), dedup_path)
        written.append(dedup_path)
    for path in written:
        manifest.add_output(path)
    manifest.write(out / "fixture_manifest.json")
    print(f"wrote {', '.join(p.name for p in written)}")


# ------------------------------------------------------------ wiring

def build_parser() -> _Parser:
    parser = _Parser(prog="contribscope", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, seed=True):
        p.add_argument("--out", required=True, help="output directory")
        if seed:
            p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed (default 42)")
            p.add_argument(
                "--randomize", action="store_true",
                help="draw a fresh seed instead of the default; recorded in the manifest",
            )

    p = sub.add_parser("ingest", help="load, merge, dedup and segment a paper corpus")
    p.add_argument("--input", required=True, help="paper-record JSONL")
    p.add_argument("--metadata", help="BibTeX metadata file")
    p.add_argument("--venues", help="comma-separated canonical venue allowlist")
    common(p, seed=False)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("stats", help="summary statistics of an annotated corpus")
    p.add_argument("--input", required=True, help="annotations JSONL")
    p.add_argument("--corpus", help="segmented corpus JSONL for per-venue breakdowns")
    common(p, seed=False)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("split", help="70/15/15 paper-level split")
    p.add_argument("--input", required=True, help="annotations JSONL")
    common(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("train", help="train the per-label linear classifiers")
    p.add_argument("--input", required=True, help="annotations JSONL")
    p.add_argument("--split", help="split.json; trains on its train part")
    p.add_argument("--dim", type=int, default=ModelConfig.dim, help="hashed feature dimension")
    p.add_argument("--l2", type=float, default=ModelConfig.l2, help="L2 penalty")
    p.add_argument("--epochs", type=int, default=ModelConfig.epochs, help="gradient steps")
    p.add_argument("--threshold", type=float, default=ModelConfig.threshold, help="decision threshold")
    common(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="label corpus sentences with a model or remote endpoint")
    p.add_argument("--input", required=True, help="segmented corpus JSONL")
    p.add_argument("--model", help="trained model file")
    p.add_argument("--endpoint", help="remote classifier base URL")
    p.add_argument("--threshold", type=float, help="decision threshold override")
    p.add_argument("--shots", help="JSON file of per-label demonstrations for the remote backend")
    p.add_argument("--timeout-ms", type=int, default=10_000, help="remote request timeout")
    p.add_argument("--retries", type=int, default=2, help="remote request retries")
    common(p, seed=False)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("eval", help="evaluate a model against gold labels and a random baseline")
    p.add_argument("--input", required=True, help="annotations JSONL")
    p.add_argument("--model", required=True, help="trained model file")
    p.add_argument("--split", help="split.json restricting evaluation")
    p.add_argument("--part", default="test", choices=["train", "val", "test"], help="split part")
    p.add_argument("--threshold", type=float, help="decision threshold override")
    p.add_argument("--exact-match", action="store_true", help="also report full-set accuracy")
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("agree", help="inter-annotator agreement with bootstrap intervals")
    p.add_argument("--input", required=True, help="multi-annotator annotations JSONL")
    p.add_argument("--resamples", type=int, default=1000, help="bootstrap resamples")
    p.add_argument("--level", type=float, default=0.95, help="confidence level")
    common(p)
    p.set_defaults(func=cmd_agree)

    p = sub.add_parser("analyze", help="corpus analyses over per-sentence label sets")
    p.add_argument(
        "analysis", choices=["pmi", "trends", "venues", "converge", "diversity", "citations"]
    )
    p.add_argument("--input", required=True, help="segmented corpus JSONL")
    p.add_argument("--predictions", help="predictions JSONL")
    p.add_argument("--annotations", help="gold annotations JSONL")
    p.add_argument("--venues", help="comma-separated canonical venue allowlist")
    p.add_argument("--window", type=int, help="trailing rolling-mean window for trends")
    p.add_argument("--reference", default="ACL", help="reference venue for converge")
    p.add_argument("--venue", help="venue filter for citations")
    p.add_argument("--year", type=int, help="year filter for citations")
    p.add_argument(
        "--maturity-filter", action=argparse.BooleanOptionalAction, default=True,
        help="citations: keep only papers at least 5 years old",
    )
    p.add_argument(
        "--figures", action=argparse.BooleanOptionalAction, default=True,
        help="also render PNG figures next to the data files",
    )
    common(p, seed=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fixture", help="generate synthetic demo corpora")
    p.add_argument("--papers", type=int, default=120, help="number of papers")
    p.add_argument("--raters", type=int, default=3, help="annotators in the agreement fixture")
    p.add_argument("--dedup-demo", action="store_true", help="also write the dual-listing corpus")
    common(p)
    p.set_defaults(func=cmd_fixture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except TransportError as exc:
        _print_error("transport", str(exc))
        return EXIT_TRANSPORT
    except ContribscopeError as exc:
        _print_error("data", str(exc))
        return EXIT_DATA
    except OSError as exc:
        _print_error("data", f"{exc.__class__.__name__}: {exc}")
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
