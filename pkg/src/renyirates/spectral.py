"""Spectral radii of irreducible blocks and growth of weighted power sums.

The rate of u^T A^n 1 equals the largest spectral radius among the
components reachable from the support of u.  Radii are computed by power
iteration on A + I: the shift makes every irreducible non-negative block
primitive, so the Collatz-Wielandt bounds close geometrically even for
periodic components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .components import (
    ComponentDecomposition,
    component_submatrix,
    reachable_components,
    strongly_connected_components,
)
from .errors import DimensionMismatch, DimensionOverflow, NoConvergence
from .nonneg import NonnegMatrix

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 10**5
CHARPOLY_MAX_DIM = 64

# Above this dimension, weighted power sums fall back to step-by-step
# sparse vector iteration instead of dense repeated squaring.
_DENSE_POWER_LIMIT = 512


@dataclass(frozen=True)
class GrowthAnalysis:
    """Per-component radii plus the reachable maximum rho(A+)."""

    decomposition: ComponentDecomposition
    component_radii: tuple[float, ...]
    reachable: frozenset[int]
    rho_plus: float
    dominant_component: int | None

    @property
    def empty(self) -> bool:
        return self.dominant_component is None


def spectral_radius_irreducible(
    a: NonnegMatrix | np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = MAX_ITERATIONS,
    return_vector: bool = False,
):
    """Perron root of an irreducible non-negative matrix (or a 1x1 block).

    Power iteration on the shifted matrix A + I, stopping when the
    Collatz-Wielandt bracket min_i (Bv)_i/v_i <= rho(B) <= max_i (Bv)_i/v_i
    is narrower than tol.
    """
    dense = a.to_dense() if isinstance(a, NonnegMatrix) else np.asarray(a, dtype=float)
    m = dense.shape[0]
    if m == 0:
        return (0.0, np.zeros(0)) if return_vector else 0.0
    if m == 1:
        rho = float(dense[0, 0])
        return (rho, np.ones(1)) if return_vector else rho
    shifted = dense + np.eye(m)
    v = np.full(m, 1.0 / m)
    for _ in range(max_iter):
        w = shifted @ v
        ratios = w / v
        lo, hi = ratios.min(), ratios.max()
        v = w / w.sum()
        if hi - lo <= tol:
            rho = float((lo + hi) / 2.0 - 1.0)
            return (rho, v) if return_vector else rho
    raise NoConvergence(
        f"power iteration did not reach tolerance {tol} in {max_iter} iterations"
    )


def growth_rate(
    a: NonnegMatrix,
    u: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iter: int = MAX_ITERATIONS,
) -> GrowthAnalysis:
    """Exact growth rate of u^T A^n 1: the maximum radius over reachable components."""
    u = np.asarray(u, dtype=float)
    if u.shape[0] != a.dim:
        raise DimensionMismatch("weight vector length does not match matrix dimension")
    decomp = strongly_connected_components(a)
    radii = tuple(
        spectral_radius_irreducible(
            component_submatrix(a, comp), tol=tol, max_iter=max_iter
        )
        for comp in decomp.components
    )
    reachable = reachable_components(decomp, u)
    rho_plus = 0.0
    dominant = None
    for cid in range(decomp.n_components):  # topological order; first max wins ties
        if cid in reachable and (dominant is None or radii[cid] > rho_plus):
            rho_plus = radii[cid]
            dominant = cid
    if dominant is None:
        rho_plus = 0.0
    return GrowthAnalysis(
        decomposition=decomp,
        component_radii=radii,
        reachable=reachable,
        rho_plus=rho_plus,
        dominant_component=dominant,
    )


def empirical_growth_probe(a: NonnegMatrix | np.ndarray, u: np.ndarray, n: int) -> float:
    """(u^T A^n 1)^(1/n), by n renormalized vector-matrix products."""
    if n < 1:
        raise ValueError(f"probe length must be >= 1, got {n}")
    dense = a.to_dense() if isinstance(a, NonnegMatrix) else np.asarray(a, dtype=float)
    w = np.asarray(u, dtype=float).copy()
    total = w.sum()
    if total == 0:
        return 0.0
    w /= total
    log_acc = math.log(total)
    for _ in range(n):
        w = w @ dense
        s = w.sum()
        if s == 0:
            return 0.0
        w /= s
        log_acc += math.log(s)
    return math.exp(log_acc / n)


def log_weighted_power_sum(a: NonnegMatrix, u: np.ndarray, n: int) -> float:
    """Natural log of u^T A^n 1, stabilized; -inf when the sum is exactly 0.

    Small systems use repeated squaring with per-step rescaling (products
    of non-negative matrices involve no cancellation), which keeps n = 10^6
    cheap; large sparse systems fall back to stepwise vector iteration.
    """
    u = np.asarray(u, dtype=float)
    if u.shape[0] != a.dim:
        raise DimensionMismatch("weight vector length does not match matrix dimension")
    if n < 0:
        raise ValueError("exponent must be non-negative")
    s = u.sum()
    if n == 0 or s == 0:
        return math.log(s) if s > 0 else -math.inf
    if a.dim <= _DENSE_POWER_LIMIT:
        return _log_power_sum_squaring(a.to_dense(), u, n)
    return _log_power_sum_stepwise(a, u, n)


def _log_power_sum_squaring(b: np.ndarray, u: np.ndarray, n: int) -> float:
    w = u.astype(float).copy()
    log_w = 0.0
    log_b = 0.0
    e = n
    while True:
        if e & 1:
            w = w @ b
            s = w.sum()
            if s == 0:
                return -math.inf
            w /= s
            log_w += log_b + math.log(s)
        e >>= 1
        if e == 0:
            break
        b = b @ b
        peak = b.max()
        if peak == 0:
            b = np.zeros_like(b)
            log_b = 0.0
        else:
            b /= peak
            log_b = 2.0 * log_b + math.log(peak)
    return log_w  # w is renormalized to unit sum after the last multiply


def _log_power_sum_stepwise(a: NonnegMatrix, u: np.ndarray, n: int) -> float:
    w = u.astype(float).copy()
    log_acc = 0.0
    for _ in range(n):
        w = a.vecmat(w)
        s = w.sum()
        if s == 0:
            return -math.inf
        w /= s
        log_acc += math.log(s)
    return log_acc


def characteristic_polynomial(
    a: NonnegMatrix | np.ndarray, max_dim: int = CHARPOLY_MAX_DIM
) -> np.ndarray:
    """Monic characteristic polynomial coefficients, highest degree first.

    Faddeev-LeVerrier recurrence: M_k = A (M_{k-1} + c_{k-1} I),
    c_k = -tr(M_k) / k.
    """
    dense = a.to_dense() if isinstance(a, NonnegMatrix) else np.asarray(a, dtype=float)
    m = dense.shape[0]
    if m > max_dim:
        raise DimensionOverflow(
            f"characteristic polynomial capped at dimension {max_dim}, got {m}"
        )
    coeffs = np.zeros(m + 1)
    coeffs[0] = 1.0
    mat = np.zeros_like(dense)
    for k in range(1, m + 1):
        mat = dense @ (mat + coeffs[k - 1] * np.eye(m))
        coeffs[k] = -np.trace(mat) / k
    return coeffs
