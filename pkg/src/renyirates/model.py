"""Markov chains, hidden Markov models, and the joint (state, symbol) chain.

The joint chain is the entry point of the tensoring pipeline: for an HMM
with transition P and emission E, the pair process (X_i, Z_i) is itself
Markov with transition p(x',z' | x,z) = P[x,x'] * E[x',z'], independent
of z.  Pair indices are ordered lexicographically, hidden state outer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidNoise,
    NegativeEntry,
    NonStochasticRow,
    WrongAlphabet,
)

# Row sums farther than this from 1 are rejected; smaller deviations are
# silently renormalized.
STOCHASTIC_TOL = 1e-9


def _clean_probabilities(a: np.ndarray, what: str) -> np.ndarray:
    a = np.array(a, dtype=float)
    if a.min(initial=0.0) < -1e-12:
        raise NegativeEntry(f"negative entry in {what}: min = {a.min()}")
    a[a < 0] = 0.0
    return a


def _validated_rows(a: np.ndarray, what: str) -> np.ndarray:
    a = _clean_probabilities(a, what)
    sums = a.sum(axis=1)
    bad = np.abs(sums - 1.0) > STOCHASTIC_TOL
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise NonStochasticRow(f"row {i} of {what} sums to {sums[i]!r}")
    a = a / sums[:, np.newaxis]
    a.setflags(write=False)
    return a


def _validated_distribution(v: np.ndarray, what: str) -> np.ndarray:
    v = _clean_probabilities(v, what).ravel()
    s = v.sum()
    if abs(s - 1.0) > STOCHASTIC_TOL:
        raise NonStochasticRow(f"{what} sums to {s!r}")
    v = v / s
    v.setflags(write=False)
    return v


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


@dataclass(frozen=True)
class MarkovChain:
    """Finite-state chain with a validated row-stochastic transition matrix."""

    states: tuple[str, ...]
    transition: np.ndarray
    initial: np.ndarray

    @property
    def n_states(self) -> int:
        return len(self.states)

    def state_index(self, label: str) -> int:
        try:
            return self.states.index(label)
        except ValueError:
            raise WrongAlphabet(f"unknown state label {label!r}") from None


@dataclass(frozen=True)
class HiddenMarkovModel:
    """Markov chain observed through a memoryless emission channel."""

    chain: MarkovChain
    observations: tuple[str, ...]
    emission: np.ndarray

    @property
    def n_states(self) -> int:
        return self.chain.n_states

    @property
    def n_symbols(self) -> int:
        return len(self.observations)

    def symbol_index(self, label: str) -> int:
        try:
            return self.observations.index(label)
        except ValueError:
            from .errors import UnknownSymbol

            raise UnknownSymbol(f"unknown observation symbol {label!r}") from None


@dataclass(frozen=True)
class JointChain:
    """The Markov pair process (X_i, Z_i) of an HMM."""

    pairs: tuple[tuple[str, str], ...]
    matrix: np.ndarray
    initial: np.ndarray


def validate_chain(
    transition,
    initial,
    states: Sequence[str] | None = None,
) -> MarkovChain:
    """Validate and normalize a transition matrix and initial distribution."""
    p = np.asarray(transition, dtype=float)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise DimensionMismatch(f"transition matrix has shape {p.shape}")
    pi = np.asarray(initial, dtype=float).ravel()
    if pi.shape[0] != p.shape[0]:
        raise DimensionMismatch(
            f"initial distribution has length {pi.shape[0]}, expected {p.shape[0]}"
        )
    labels = _default_labels(p.shape[0]) if states is None else tuple(states)
    if len(labels) != p.shape[0]:
        raise DimensionMismatch("state label count does not match matrix dimension")
    return MarkovChain(
        states=labels,
        transition=_validated_rows(p, "transition matrix"),
        initial=_validated_distribution(pi, "initial distribution"),
    )


def validate_hmm(
    chain: MarkovChain,
    emission,
    observations: Sequence[str] | None = None,
) -> HiddenMarkovModel:
    """Validate an emission kernel against a chain."""
    e = np.asarray(emission, dtype=float)
    if e.ndim != 2 or e.shape[0] != chain.n_states:
        raise DimensionMismatch(f"emission matrix has shape {e.shape}")
    labels = _default_labels(e.shape[1]) if observations is None else tuple(observations)
    if len(labels) != e.shape[1]:
        raise DimensionMismatch("observation label count does not match emission width")
    return HiddenMarkovModel(
        chain=chain,
        observations=labels,
        emission=_validated_rows(e, "emission matrix"),
    )


def joint_chain(hmm: HiddenMarkovModel) -> JointChain:
    """Transition matrix and initial law of the pair process (X, Z).

    M[(x,z),(x',z')] = P[x,x'] * E[x',z'] does not depend on z, so all
    rows sharing the hidden component are identical.
    """
    p = hmm.chain.transition
    e = hmm.emission
    nx, nz = e.shape
    m4 = np.broadcast_to(
        p[:, np.newaxis, :, np.newaxis] * e[np.newaxis, np.newaxis, :, :],
        (nx, nz, nx, nz),
    )
    matrix = m4.reshape(nx * nz, nx * nz).copy()
    matrix.setflags(write=False)
    mu = (hmm.chain.initial[:, np.newaxis] * e).reshape(-1)
    mu.setflags(write=False)
    pairs = tuple(
        (x, z) for x in hmm.chain.states for z in hmm.observations
    )
    return JointChain(pairs=pairs, matrix=matrix, initial=mu)


def identity_observation(chain: MarkovChain) -> HiddenMarkovModel:
    """Observe the chain itself: Z = X, emission = identity."""
    return HiddenMarkovModel(
        chain=chain,
        observations=chain.states,
        emission=np.eye(chain.n_states),
    )


def deterministic_observation(
    chain: MarkovChain, observation_map: Mapping[str, str]
) -> HiddenMarkovModel:
    """Noiseless measurement Z = T(X) for a total map T on the states.

    The observation alphabet is the sorted set of values of T.
    """
    missing = [s for s in chain.states if s not in observation_map]
    if missing:
        raise WrongAlphabet(f"observation map undefined on states {missing}")
    symbols = tuple(sorted(set(observation_map[s] for s in chain.states)))
    e = np.zeros((chain.n_states, len(symbols)))
    for i, s in enumerate(chain.states):
        e[i, symbols.index(observation_map[s])] = 1.0
    return validate_hmm(chain, e, symbols)


def bsc_hmm(chain: MarkovChain, epsilon: float) -> HiddenMarkovModel:
    """Binary chain observed through a symmetric channel with crossover epsilon."""
    if chain.n_states != 2:
        raise WrongAlphabet(f"BSC observation needs 2 states, got {chain.n_states}")
    if not (0.0 <= epsilon <= 0.5):
        raise InvalidNoise(f"crossover probability {epsilon} outside [0, 1/2]")
    e = np.array([[1.0 - epsilon, epsilon], [epsilon, 1.0 - epsilon]])
    return validate_hmm(chain, e, ("0", "1"))
