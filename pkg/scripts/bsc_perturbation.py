"""Entropy rate of a two-state chain observed through a binary symmetric channel.

Sweeps the crossover probability and prints the order-2 rate, the shift
from the noiseless rate, and that shift divided by epsilon. The last
column stabilizing shows the first-order sensitivity of the rate to
channel noise.
"""

import pathlib
import sys

from renyirates import bsc_hmm, collision_system, entropy_rate
from renyirates.modelfile import load_model

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def main() -> int:
    chain = load_model(FIXTURES / "bsc.model")
    base = entropy_rate(bsc_hmm(chain, 0.0), 2).value_bits
    dim = collision_system(bsc_hmm(chain, 0.01), 2).dimension
    print(f"noiseless rate: {base:.10f} bits/symbol (collision dimension {dim})")
    print(f"{'epsilon':>10} {'rate':>14} {'shift':>12} {'shift/eps':>12}")
    for eps in (0.1, 0.05, 0.02, 0.01, 1e-3, 1e-4, 1e-5):
        rate = entropy_rate(bsc_hmm(chain, eps), 2).value_bits
        shift = rate - base
        print(f"{eps:>10.0e} {rate:>14.10f} {shift:>12.4e} {shift / eps:>12.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
