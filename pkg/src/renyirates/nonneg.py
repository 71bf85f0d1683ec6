"""Sparse non-negative square matrices.

This is the carrier type for every matrix in the pipeline: transition
matrices, Kronecker tensor powers, their collision restrictions, and
Hadamard powers.  Entries are stored in CSR form with structural zeros
dropped, so the sparsity pattern *is* the associated graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from scipy import sparse

from .errors import DimensionMismatch, NegativeEntry


@dataclass(frozen=True)
class NonnegMatrix:
    """Square non-negative matrix; immutable after construction."""

    csr: sparse.csr_array

    def __post_init__(self):
        m, n = self.csr.shape
        if m != n:
            raise DimensionMismatch(f"matrix is {m}x{n}, expected square")
        if self.csr.nnz and self.csr.data.min() < 0:
            raise NegativeEntry("negative entry in non-negative matrix")

    @classmethod
    def from_dense(cls, a: np.ndarray) -> "NonnegMatrix":
        a = np.asarray(a, dtype=float)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected 2-d array, got shape {a.shape}")
        c = sparse.csr_array(a)
        c.eliminate_zeros()
        return cls(c)

    @classmethod
    def from_sparse(cls, a) -> "NonnegMatrix":
        c = sparse.csr_array(a)
        c.eliminate_zeros()
        c.sort_indices()
        return cls(c)

    @classmethod
    def from_entries(cls, dim: int, entries: dict[tuple[int, int], float]) -> "NonnegMatrix":
        rows = [i for i, _ in entries]
        cols = [j for _, j in entries]
        vals = list(entries.values())
        c = sparse.csr_array(sparse.coo_array((vals, (rows, cols)), shape=(dim, dim)))
        c.eliminate_zeros()
        return cls(c)

    @property
    def dim(self) -> int:
        return self.csr.shape[0]

    @property
    def nnz(self) -> int:
        return self.csr.nnz

    def entry(self, i: int, j: int) -> float:
        return float(self.csr[i, j])

    def to_dense(self) -> np.ndarray:
        return self.csr.toarray()

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.csr.sum(axis=1)).ravel()

    def entries(self) -> Iterator[tuple[int, int, float]]:
        """Iterate stored (row, col, value) triples, row-major."""
        coo = self.csr.tocoo()
        for i, j, v in zip(coo.row, coo.col, coo.data):
            yield int(i), int(j), float(v)

    def submatrix(self, nodes: Sequence[int]) -> "NonnegMatrix":
        """Principal submatrix on the given indices, in the given order."""
        idx = np.asarray(list(nodes), dtype=int)
        if idx.size == 0:
            return NonnegMatrix.from_dense(np.zeros((0, 0)))
        sub = self.csr[idx][:, idx]
        return NonnegMatrix.from_sparse(sub)

    def kron(self, other: "NonnegMatrix") -> "NonnegMatrix":
        return NonnegMatrix.from_sparse(sparse.kron(self.csr, other.csr, format="csr"))

    def scale_columns(self, weights: np.ndarray) -> "NonnegMatrix":
        w = np.asarray(weights, dtype=float)
        if w.shape != (self.dim,):
            raise DimensionMismatch("column weight length mismatch")
        return NonnegMatrix.from_sparse(self.csr.multiply(w[np.newaxis, :]))

    def vecmat(self, u: np.ndarray) -> np.ndarray:
        """Row vector times matrix: u^T A."""
        return self.csr.T @ np.asarray(u, dtype=float)
