"""Multi-label contribution classifier: one logistic model per label.

Binary relevance: each of the eight labels gets an independent
L2-regularized logistic regression over hashed text features, trained
by full-batch gradient descent. Everything downstream of the seed is
deterministic, including the serialized model bytes.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .errors import DataError
from .features import DEFAULT_DIM, FeatureHasher, FeatureMatrix
from .taxonomy import ALL_LABELS, LabelSet

logger = logging.getLogger(__name__)

MODEL_MAGIC = b"CSMODEL1"


@dataclass(frozen=True)
class ModelConfig:
    dim: int = DEFAULT_DIM
    l2: float = 1e-4
    epochs: int = 500
    learning_rate: float | None = None  # None: 1 / (0.25 * mean row norm^2 + l2)
    threshold: float = 0.5
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "l2": self.l2,
            "epochs": self.epochs,
            "learning_rate": self.learning_rate,
            "threshold": self.threshold,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "ModelConfig":
        return cls(**obj)


def logistic_loss(params: np.ndarray, X: FeatureMatrix, y: np.ndarray, l2: float) -> float:
    """Mean logistic loss plus L2 penalty; intercept is params[-1], unpenalized.

    loss = mean(log(1 + exp(-s z))) + l2/2 ||w||^2   with s in {-1,+1}.
    Uses logaddexp so large margins do not overflow.
    """
    n = X.n_rows
    if n == 0:
        raise DataError("cannot evaluate loss on an empty design matrix")
    w, b = params[:-1], params[-1]
    z = X.matvec(w) + b
    s = 2.0 * y - 1.0
    return float(np.mean(np.logaddexp(0.0, -s * z))) + 0.5 * l2 * float(w @ w)


def logistic_loss_and_grad(
    params: np.ndarray, X: FeatureMatrix, y: np.ndarray, l2: float
) -> tuple[float, np.ndarray]:
    """Loss as in logistic_loss, plus its exact gradient."""
    n = X.n_rows
    if n == 0:
        raise DataError("cannot evaluate loss on an empty design matrix")
    w, b = params[:-1], params[-1]
    z = X.matvec(w) + b
    s = 2.0 * y - 1.0
    loss = float(np.mean(np.logaddexp(0.0, -s * z))) + 0.5 * l2 * float(w @ w)
    # d/dz log(1+exp(-sz)) = -s * sigmoid(-sz)
    r = -s * _sigmoid(-s * z) / n
    grad = np.empty_like(params)
    grad[:-1] = X.rmatvec(r) + l2 * w
    grad[-1] = float(np.sum(r))
    return loss, grad


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


@dataclass
class TrainReport:
    final_losses: dict[str, float] = dataclass_field(default_factory=dict)
    positives: dict[str, int] = dataclass_field(default_factory=dict)
    n_sentences: int = 0


class ContributionModel:
    """Trained per-label weights plus the hasher configuration."""

    def __init__(self, config: ModelConfig, weights: np.ndarray, intercepts: np.ndarray):
        if weights.shape != (len(ALL_LABELS), config.dim):
            raise DataError(
                f"weight matrix shape {weights.shape} does not match "
                f"({len(ALL_LABELS)}, {config.dim})"
            )
        self.config = config
        self.weights = weights
        self.intercepts = intercepts
        self.hasher = FeatureHasher(config.dim)

    def scores(self, texts: list[str]) -> np.ndarray:
        """(n, 8) membership scores in [0, 1), one column per label.

        Scores are capped just below 1.0 so a threshold of 1.0 under
        >= semantics assigns nothing.
        """
        X = self.hasher.transform_matrix(texts)
        out = np.empty((len(texts), len(ALL_LABELS)), dtype=np.float64)
        for j in range(len(ALL_LABELS)):
            out[:, j] = _sigmoid(X.matvec(self.weights[j]) + self.intercepts[j])
        return np.minimum(out, np.nextafter(1.0, 0.0))

    def predict(self, texts: list[str], threshold: float | None = None) -> list[LabelSet]:
        if threshold is None:
            threshold = self.config.threshold
        if not 0.0 <= threshold <= 1.0:
            raise DataError(f"threshold must be in [0, 1], got {threshold}")
        score_mat = self.scores(texts)
        result: list[LabelSet] = []
        for row in score_mat:
            result.append(frozenset(label for j, label in enumerate(ALL_LABELS) if row[j] >= threshold))
        return result

    def save(self, path) -> None:
        """Versioned binary container with byte-for-byte reproducible output."""
        header = json.dumps(
            {"config": self.config.to_dict(), "labels": [str(l) for l in ALL_LABELS], "version": 1},
            sort_keys=True,
        ).encode("utf-8")
        with open(path, "wb") as handle:
            handle.write(MODEL_MAGIC)
            handle.write(len(header).to_bytes(4, "big"))
            handle.write(header)
            handle.write(np.ascontiguousarray(self.weights, dtype="<f8").tobytes())
            handle.write(np.ascontiguousarray(self.intercepts, dtype="<f8").tobytes())

    @classmethod
    def load(cls, path) -> "ContributionModel":
        with open(path, "rb") as handle:
            blob = handle.read()
        if blob[: len(MODEL_MAGIC)] != MODEL_MAGIC:
            raise DataError(f"{path}: not a model file (bad magic)")
        offset = len(MODEL_MAGIC)
        header_len = int.from_bytes(blob[offset : offset + 4], "big")
        offset += 4
        try:
            header = json.loads(blob[offset : offset + header_len].decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise DataError(f"{path}: corrupt model header") from exc
        offset += header_len
        if header.get("version") != 1:
            raise DataError(f"{path}: unsupported model version {header.get('version')!r}")
        if header.get("labels") != [str(l) for l in ALL_LABELS]:
            raise DataError(f"{path}: model label set does not match this package")
        config = ModelConfig.from_dict(header["config"])
        n_labels = len(ALL_LABELS)
        need = n_labels * config.dim * 8 + n_labels * 8
        body = blob[offset:]
        if len(body) != need:
            raise DataError(f"{path}: truncated model file ({len(body)} of {need} payload bytes)")
        weights = np.frombuffer(body[: n_labels * config.dim * 8], dtype="<f8").reshape(n_labels, config.dim)
        intercepts = np.frombuffer(body[n_labels * config.dim * 8 :], dtype="<f8")
        return cls(config, weights.copy(), intercepts.copy())


def train_model(
    texts: list[str], labels: list[LabelSet], config: ModelConfig | None = None
) -> tuple[ContributionModel, TrainReport]:
    """Train the eight per-label classifiers on labeled sentences."""
    if config is None:
        config = ModelConfig()
    if len(texts) != len(labels):
        raise DataError(f"{len(texts)} texts but {len(labels)} label sets")
    if not texts:
        raise DataError("cannot train on an empty corpus")
    hasher = FeatureHasher(config.dim)
    X = hasher.transform_matrix(texts)
    lr = config.learning_rate
    if lr is None:
        lr = 1.0 / (0.25 * X.mean_sq_row_norm() + config.l2)
    weights = np.zeros((len(ALL_LABELS), config.dim), dtype=np.float64)
    intercepts = np.zeros(len(ALL_LABELS), dtype=np.float64)
    report = TrainReport(n_sentences=len(texts))
    for j, label in enumerate(ALL_LABELS):
        y = np.array([1.0 if label in ls else 0.0 for ls in labels])
        rng = np.random.default_rng([config.seed, j])
        params = np.concatenate([rng.normal(0.0, 0.01, size=config.dim), [0.0]])
        loss = _minimize(params, X, y, config.l2, config.epochs, lr)
        weights[j] = params[:-1]
        intercepts[j] = params[-1]
        report.final_losses[str(label)] = loss
        report.positives[str(label)] = int(y.sum())
        logger.debug("trained %s: %d positives, final loss %.6f", label, int(y.sum()), loss)
    return ContributionModel(config, weights, intercepts), report


def _minimize(
    params: np.ndarray, X: FeatureMatrix, y: np.ndarray, l2: float, epochs: int, step0: float
) -> float:
    """Gradient descent with Armijo backtracking, in place. Returns final loss.

    The step adapts: halved until the sufficient-decrease test passes,
    grown modestly after each accepted step. Fully deterministic.
    """
    step = step0
    loss = float("nan")
    for _ in range(epochs):
        loss, grad = logistic_loss_and_grad(params, X, y, l2)
        sq_norm = float(grad @ grad)
        if sq_norm == 0.0:
            break
        for _ in range(40):
            candidate = params - step * grad
            if logistic_loss(candidate, X, y, l2) <= loss - 1e-4 * step * sq_norm:
                break
            step *= 0.5
        params[:] = candidate
        step *= 1.5
    return loss


def random_predict(n: int, seed: int, q: float = 0.5) -> list[LabelSet]:
    """Coin-flip baseline: each label independently with probability q."""
    if not 0.0 <= q <= 1.0:
        raise DataError(f"q must be in [0, 1], got {q}")
    rng = np.random.default_rng(seed)
    draws = rng.random((n, len(ALL_LABELS))) < q
    return [frozenset(label for j, label in enumerate(ALL_LABELS) if draws[i, j]) for i in range(n)]
