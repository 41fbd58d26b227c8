"""contribscope: classify and analyze contribution statements in paper abstracts.

The package splits into ingestion (ingest, bibtex, segment, venues),
the label taxonomy, annotated-corpus handling (annotations), the
multi-label classifier (features, model, prompts, remote), evaluation
(metrics), corpus analyses (analysis), and deterministic I/O
(outputs, figures). The cli module wires them into batch commands.
"""

from .analysis import (
    CitationStats,
    CooccurrenceMatrix,
    PaperLabels,
    SimilaritySeries,
    TrendSeries,
    VenueProfile,
    citation_stats,
    distribution_similarity,
    jensen_shannon_divergence,
    pmi_matrix,
    unique_types_per_paper,
    venue_profiles,
    venue_similarity_series,
    yearly_type_share,
)
from .annotations import (
    AnnotatedSentence,
    SplitManifest,
    StatsReport,
    corpus_stats,
    load_annotations,
    save_annotations,
    select_split,
    split_corpus,
)
from .bibtex import BibEntry, load_metadata, parse_bibtex
from .errors import BibtexError, ContribscopeError, DataError, TransportError
from .features import FeatureHasher, FeatureMatrix
from .ingest import IngestReport, PaperRecord, ingest_corpus, load_papers, merge_and_dedup, save_papers
from .metrics import (
    AgreementReport,
    KappaCI,
    LabelConfusion,
    MacroScores,
    agreement_report,
    agreement_tables,
    exact_match,
    fleiss_kappa,
    kappa_ci,
    macro_prf1,
    mcnemar,
)
from .model import (
    ContributionModel,
    ModelConfig,
    logistic_loss_and_grad,
    random_predict,
    train_model,
)
from .prompts import PromptTemplate, Response, Shot, build_prompt, parse_yes_no
from .remote import RemoteConfig, RemoteResult, remote_classify
from .segment import normalize_whitespace, segment_sentences
from .taxonomy import (
    ALL_LABELS,
    ContributionLabel,
    Kind,
    LabelSet,
    labels_of_kind,
    parse_label,
    parse_label_set,
    render_label,
    render_label_set,
)
from .venues import Venue, VenueId, normalize_venue, parse_venue_name

__version__ = "0.1.0"

__all__ = [
    "ALL_LABELS",
    "AgreementReport",
    "AnnotatedSentence",
    "BibEntry",
    "BibtexError",
    "CitationStats",
    "ContribscopeError",
    "ContributionLabel",
    "ContributionModel",
    "CooccurrenceMatrix",
    "DataError",
    "FeatureHasher",
    "FeatureMatrix",
    "IngestReport",
    "KappaCI",
    "Kind",
    "LabelConfusion",
    "LabelSet",
    "MacroScores",
    "ModelConfig",
    "PaperLabels",
    "PaperRecord",
    "PromptTemplate",
    "RemoteConfig",
    "RemoteResult",
    "Response",
    "Shot",
    "SimilaritySeries",
    "SplitManifest",
    "StatsReport",
    "TransportError",
    "TrendSeries",
    "Venue",
    "VenueId",
    "VenueProfile",
    "agreement_report",
    "agreement_tables",
    "build_prompt",
    "citation_stats",
    "corpus_stats",
    "distribution_similarity",
    "exact_match",
    "fleiss_kappa",
    "ingest_corpus",
    "jensen_shannon_divergence",
    "kappa_ci",
    "labels_of_kind",
    "load_annotations",
    "load_metadata",
    "load_papers",
    "logistic_loss_and_grad",
    "macro_prf1",
    "mcnemar",
    "merge_and_dedup",
    "normalize_venue",
    "normalize_whitespace",
    "parse_bibtex",
    "parse_label",
    "parse_label_set",
    "parse_venue_name",
    "parse_yes_no",
    "pmi_matrix",
    "random_predict",
    "remote_classify",
    "render_label",
    "render_label_set",
    "save_annotations",
    "save_papers",
    "segment_sentences",
    "select_split",
    "split_corpus",
    "train_model",
    "unique_types_per_paper",
    "venue_profiles",
    "venue_similarity_series",
    "yearly_type_share",
]
