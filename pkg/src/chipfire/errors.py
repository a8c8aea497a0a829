"""Exception types shared across the package."""


class ChipfireError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ChipfireError):
    """Invalid graph input or construction."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DisconnectedError(GraphError):
    """The graph is not connected."""


class EmptyGraphError(GraphError):
    """The graph has no vertices."""


class EdgeListSyntaxError(GraphError):
    """A line of edge-list text could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DivisorError(ChipfireError):
    """Invalid divisor or vertex-function input."""


class UnboundVertexError(DivisorError):
    """A coefficient refers to a vertex not in the bound graph."""


class MissingVertexError(DivisorError):
    """A vertex function is not total on V(G)."""


class NonzeroDegreeError(DivisorError):
    """An operation requiring a degree-zero divisor got something else."""


class CertificateSearchExhausted(ChipfireError):
    """No ordering certificate was found within the configured bounds.

    The dichotomy theorem guarantees one exists, so seeing this error
    signals a bug in the engine rather than a property of the input.
    """


class MetricError(ChipfireError):
    """Invalid metric-graph input."""


class NonIntegerSlopeError(MetricError):
    """A piecewise-linear function has a non-integer slope segment."""


class DiscontinuityError(MetricError):
    """A piecewise-linear function is discontinuous at a vertex."""


class UnrepresentablePointError(MetricError):
    """A point does not lie at a rational position on its edge."""


class SubdivisionAuditError(ChipfireError):
    """A rank changed under uniform subdivision; this must never happen."""


class UnassignedPointError(ChipfireError):
    """A curve point has no vertex assignment in the specialization table."""
