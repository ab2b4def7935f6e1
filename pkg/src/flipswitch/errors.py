"""Exception types shared across the package.

The CLI maps these onto its documented exit codes, so the distinction
between the classes is part of the external contract.
"""


class SimulationError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(SimulationError):
    """Inconsistent dimensions, malformed scenario options, bad parameters."""


class NumericContractError(SimulationError):
    """An input violates a numeric precondition (hermiticity, positivity, ...)."""


class CptpViolationError(SimulationError):
    """A parameter triple does not describe a completely positive trace-preserving map."""


class BidirectionalityError(SimulationError):
    """A non-unital channel was passed where a doubly stochastic one is required."""


class SingularityError(SimulationError):
    """A formula is evaluated at a point where it is genuinely singular."""


class PostSelectionError(SimulationError):
    """The selected measurement outcome has (numerically) zero probability."""
