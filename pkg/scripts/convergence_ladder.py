"""Convergence of per-symbol finite-length entropy to the asymptotic rate.

For the bundled three-state example, prints H_alpha(n)/n on a doubling
ladder of lengths next to the spectral rate, for orders 2 and 3. The gap
decays like c/n because H_alpha(n) has a constant offset from the
transient part of the restricted matrix.
"""

import pathlib
import sys

from renyirates import entropy_rate, finite_length_entropy
from renyirates.modelfile import load_model

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def main() -> int:
    hmm = load_model(FIXTURES / "fig2.model")
    for alpha in (2, 3):
        rate = entropy_rate(hmm, alpha).value_bits
        print(f"order {alpha}: rate {rate:.10f} bits/symbol")
        print(f"{'n':>8} {'H(n)/n':>14} {'gap':>12} {'n*gap':>10}")
        n = 10
        while n <= 10**6:
            per_symbol = finite_length_entropy(hmm, alpha, n).value_bits / n
            gap = per_symbol - rate
            print(f"{n:>8} {per_symbol:>14.10f} {gap:>12.4e} {n * gap:>10.6f}")
            n *= 10
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
