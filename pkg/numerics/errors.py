"""
PPA Reductions Toolkit - Errors
One exception hierarchy for every package; boundary layers map it to exit codes and HTTP statuses.
"""


class ReductionToolkitError(Exception):
    """Base class for all toolkit errors."""


class InstanceError(ReductionToolkitError, ValueError):
    """Malformed instance or violated instance invariant."""


class DomainError(ReductionToolkitError, ValueError):
    """Interval, cut or point outside the domain it was checked against."""


class SearchBoundError(ReductionToolkitError):
    """Brute-force search asked to enumerate beyond its configured bound."""


class OracleBugError(ReductionToolkitError):
    """A guaranteed-to-exist solution was not found."""


class ParameterError(ReductionToolkitError, ValueError):
    """ReductionParams violate an ordering or integrality constraint."""


class PullBackError(ReductionToolkitError):
    """A folded-grid pair does not survive the fold trace."""


class ExtractionError(ReductionToolkitError):
    """A consensus-halving solution cannot be mapped back to cube points."""


class CircuitError(ReductionToolkitError, ValueError):
    """Cyclic or dangling wiring, or an output contract violation."""
