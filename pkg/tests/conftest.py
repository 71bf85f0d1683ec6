from pathlib import Path

import numpy as np
import pytest

from renyirates import deterministic_observation, validate_chain

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

# Three-state chain of the worked example; states 1 and 3 look alike.
P_EXAMPLE = np.array([[0.9, 0.1, 0.0], [0.0, 0.4, 0.6], [0.0, 0.6, 0.4]])
PI_UNIFORM3 = np.full(3, 1.0 / 3.0)
OBS_MAP = {"1": "a", "2": "b", "3": "a"}

# Restricted tensored matrix at order 2 under the canonical index order
# (1,1|a), (1,3|a), (3,1|a), (3,3|a), (2,2|b).
RESTRICTED_EXAMPLE = np.array(
    [
        [0.81, 0.00, 0.00, 0.00, 0.01],
        [0.00, 0.36, 0.00, 0.00, 0.06],
        [0.00, 0.00, 0.36, 0.00, 0.06],
        [0.00, 0.00, 0.00, 0.16, 0.36],
        [0.00, 0.00, 0.00, 0.36, 0.16],
    ]
)


@pytest.fixture
def example_chain():
    return validate_chain(P_EXAMPLE, PI_UNIFORM3)


@pytest.fixture
def example_hmm(example_chain):
    return deterministic_observation(example_chain, OBS_MAP)
