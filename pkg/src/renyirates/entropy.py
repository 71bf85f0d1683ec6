"""Top-level Renyi entropy formulas.

Finite-length entropies come from powers of the restricted tensored
matrix; rates from the maximal spectral radius over reachable irreducible
components.  A length-n realization uses exponent n - 1, validated
against the brute-force oracle.  All values are in bits (log base 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import InvalidOrder
from .model import HiddenMarkovModel, MarkovChain
from .nonneg import NonnegMatrix
from .spectral import GrowthAnalysis, growth_rate, log_weighted_power_sum
from .tensor import (
    DEFAULT_MAX_DIM,
    CollisionSystem,
    collision_system,
    hadamard_power,
    noiseless_collision_system,
)

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class EntropyReport:
    """Result of an entropy computation plus spectral diagnostics."""

    order: float
    kind: str  # "finite" or "rate"
    value_bits: float  # math.inf when the collision mass vanishes
    length: int | None = None
    log2_collision: float | None = None
    dimension: int | None = None
    rho_plus: float | None = None
    component_radii: tuple[float, ...] | None = None
    reachable: tuple[int, ...] | None = None
    dominant_component: int | None = None
    dominant_members: tuple[str, ...] | None = None

    @property
    def finite(self) -> bool:
        return math.isfinite(self.value_bits)


def _finite_report(order: float, n: int, log_cp: float, dimension: int) -> EntropyReport:
    if log_cp == -math.inf:
        value = math.inf
    else:
        value = (1.0 / (1.0 - order)) * (log_cp / _LN2)
        value = max(value, 0.0)  # clip -0.0 and tolerance dust
    return EntropyReport(
        order=order,
        kind="finite",
        value_bits=value,
        length=n,
        log2_collision=log_cp / _LN2 if log_cp != -math.inf else -math.inf,
        dimension=dimension,
    )


def _rate_report(
    order: float, ga: GrowthAnalysis, labels: tuple[str, ...], dimension: int
) -> EntropyReport:
    if ga.rho_plus > 0:
        value = max((1.0 / (1.0 - order)) * math.log2(ga.rho_plus), 0.0)
    else:
        value = math.inf
    dominant_members = None
    if ga.dominant_component is not None:
        members = ga.decomposition.components[ga.dominant_component]
        dominant_members = tuple(labels[i] for i in members)
    return EntropyReport(
        order=order,
        kind="rate",
        value_bits=value,
        dimension=dimension,
        rho_plus=ga.rho_plus,
        component_radii=ga.component_radii,
        reachable=tuple(sorted(ga.reachable)),
        dominant_component=ga.dominant_component,
        dominant_members=dominant_members,
    )


def finite_length_entropy(
    hmm: HiddenMarkovModel,
    alpha: int,
    n: int,
    max_dim: int = DEFAULT_MAX_DIM,
) -> EntropyReport:
    """Renyi entropy of the first n observed symbols, H_alpha(Z_1..Z_n)."""
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    cs = collision_system(hmm, alpha, max_dim=max_dim)
    log_cp = log_weighted_power_sum(cs.matrix, cs.initial, n - 1)
    return _finite_report(float(cs.order), n, log_cp, cs.dimension)


def entropy_rate(
    hmm: HiddenMarkovModel,
    alpha: int,
    max_dim: int = DEFAULT_MAX_DIM,
    tol: float = 1e-12,
) -> EntropyReport:
    """Asymptotic Renyi entropy per observed symbol."""
    cs = collision_system(hmm, alpha, max_dim=max_dim)
    ga = growth_rate(cs.matrix, cs.initial, tol=tol)
    return _rate_report(float(cs.order), ga, cs.labels(), cs.dimension)


def _real_order(alpha: float) -> float:
    alpha = float(alpha)
    if not alpha > 0 or alpha == 1.0:
        raise InvalidOrder(f"order must be positive and != 1, got {alpha}")
    return alpha


def markov_rate(
    chain: MarkovChain, alpha: float, tol: float = 1e-12
) -> EntropyReport:
    """Rate of a fully observed chain, any real order: Hadamard-power route."""
    alpha = _real_order(alpha)
    a = hadamard_power(NonnegMatrix.from_dense(chain.transition), alpha)
    u = chain.initial**alpha
    ga = growth_rate(a, u, tol=tol)
    return _rate_report(alpha, ga, chain.states, a.dim)


def markov_finite_length(chain: MarkovChain, alpha: float, n: int) -> EntropyReport:
    """Finite-length entropy of a fully observed chain, any real order."""
    alpha = _real_order(alpha)
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    a = hadamard_power(NonnegMatrix.from_dense(chain.transition), alpha)
    u = chain.initial**alpha
    log_cp = log_weighted_power_sum(a, u, n - 1)
    return _finite_report(alpha, n, log_cp, a.dim)


def noiseless_rate(
    chain: MarkovChain,
    observation_map: Mapping[str, str],
    alpha: int,
    max_dim: int = DEFAULT_MAX_DIM,
    tol: float = 1e-12,
) -> EntropyReport:
    """Rate of Z = T(X) via the sparse tuple-restricted tensor."""
    cs = noiseless_collision_system(chain, observation_map, alpha, max_dim=max_dim)
    ga = growth_rate(cs.matrix, cs.initial, tol=tol)
    return _rate_report(float(cs.order), ga, cs.labels(), cs.dimension)
