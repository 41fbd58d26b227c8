"""Hashed bag-of-ngrams text features.

Tokens are lowercased ``\\w+`` runs; features are unigrams plus
adjacent-pair bigrams joined with a space. Each feature maps to a
column via blake2b (8-byte digest, big-endian) modulo the table size,
which is stable across processes and platforms, unlike ``hash()``.
"""

from __future__ import annotations

import re
from hashlib import blake2b

import numpy as np

DEFAULT_DIM = 2**18

_TOKEN = re.compile(r"\w+")


def tokenize(text: str) -> list[str]:
    return _TOKEN.findall(text.lower())


def ngrams(tokens: list[str]) -> list[str]:
    feats = list(tokens)
    feats.extend(f"{a} {b}" for a, b in zip(tokens, tokens[1:]))
    return feats


class FeatureHasher:
    """Maps sentences to fixed-width count vectors.

    Feature-to-column lookups are memoized; the cache is shared across
    calls, which matters when featurizing a corpus with a heavy-tailed
    vocabulary.
    """

    def __init__(self, dim: int = DEFAULT_DIM):
        if dim <= 0:
            raise ValueError("dim must be positive")
        self.dim = dim
        self._cache: dict[str, int] = {}

    def column(self, feature: str) -> int:
        col = self._cache.get(feature)
        if col is None:
            digest = blake2b(feature.encode("utf-8"), digest_size=8).digest()
            col = int.from_bytes(digest, "big") % self.dim
            self._cache[feature] = col
        return col

    def transform_one(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.float64)
        for feature in ngrams(tokenize(text)):
            vec[self.column(feature)] += 1.0
        return vec

    def transform(self, texts: list[str]) -> np.ndarray:
        """Dense (n, dim) count matrix; fine at the corpus sizes used here."""
        mat = np.zeros((len(texts), self.dim), dtype=np.float64)
        for i, text in enumerate(texts):
            for feature in ngrams(tokenize(text)):
                mat[i, self.column(feature)] += 1.0
        return mat

    def transform_matrix(self, texts: list[str]) -> "FeatureMatrix":
        """Sparse count matrix; the dense path is infeasible at 2^18 columns."""
        indptr = np.zeros(len(texts) + 1, dtype=np.int64)
        indices: list[int] = []
        values: list[float] = []
        for i, text in enumerate(texts):
            counts: dict[int, float] = {}
            for feature in ngrams(tokenize(text)):
                col = self.column(feature)
                counts[col] = counts.get(col, 0.0) + 1.0
            cols = sorted(counts)
            indices.extend(cols)
            values.extend(counts[c] for c in cols)
            indptr[i + 1] = len(indices)
        return FeatureMatrix(
            indptr=indptr,
            indices=np.asarray(indices, dtype=np.int64),
            values=np.asarray(values, dtype=np.float64),
            dim=self.dim,
        )


class FeatureMatrix:
    """Row-compressed sparse matrix supporting the two products training needs."""

    def __init__(self, indptr: np.ndarray, indices: np.ndarray, values: np.ndarray, dim: int):
        self.indptr = indptr
        self.indices = indices
        self.values = values
        self.dim = dim
        self.n_rows = len(indptr) - 1
        # bincount over row ids handles empty rows, which reduceat does not
        self._row_ids = np.repeat(np.arange(self.n_rows, dtype=np.int64), np.diff(indptr))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.dim)

    def matvec(self, w: np.ndarray) -> np.ndarray:
        """X @ w"""
        return np.bincount(self._row_ids, weights=self.values * w[self.indices], minlength=self.n_rows)

    def rmatvec(self, r: np.ndarray) -> np.ndarray:
        """X.T @ r"""
        return np.bincount(self.indices, weights=self.values * r[self._row_ids], minlength=self.dim)

    def mean_sq_row_norm(self) -> float:
        if self.n_rows == 0:
            return 0.0
        return float(np.sum(self.values**2) / self.n_rows)

    def to_dense(self) -> np.ndarray:
        mat = np.zeros(self.shape, dtype=np.float64)
        mat[self._row_ids, self.indices] = self.values
        return mat
