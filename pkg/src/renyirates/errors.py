"""Exception types shared across the package."""


class RenyiError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(RenyiError):
    """Shapes of matrices/vectors do not agree."""


class NegativeEntry(RenyiError):
    """A probability matrix or vector contains a negative entry."""


class NonStochasticRow(RenyiError):
    """A row of a transition/emission matrix does not sum to 1."""


class DimensionOverflow(RenyiError):
    """A construction would exceed the configured dimension cap."""


class InvalidOrder(RenyiError):
    """The requested entropy order is outside the admissible range."""


class NoConvergence(RenyiError):
    """Power iteration did not reach the target tolerance in the budget."""


class UnknownSymbol(RenyiError):
    """An observation symbol is not part of the model's alphabet."""


class InvalidNoise(RenyiError):
    """Crossover probability outside [0, 1/2]."""


class WrongAlphabet(RenyiError):
    """The model alphabet does not fit the requested construction."""


class ModelFormatError(RenyiError):
    """A model file failed to parse or validate."""
