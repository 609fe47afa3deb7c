"""Exceptions raised by the toolkit.

Failures that are mathematical outcomes (closure witnesses, coloring
obstructions, failed acyclicity checks) are returned as values instead.
"""

from typing import Optional


class GKMError(Exception):
    """Base class for all toolkit errors."""


class GraphValidationError(GKMError):
    """The input document does not describe a valid GKM graph.

    Attributes:
        ref: Id of the offending vertex, edge or connection entry, if any
    """

    def __init__(self, message: str, ref: Optional[str] = None) -> None:
        super().__init__(f"{message} [{ref}]" if ref else message)
        self.ref = ref


class ConnectionFailure(GKMError):
    """The canonical connection could not be determined."""

    def __init__(self, message: str, dart: str, edge: str) -> None:
        super().__init__(f"{message}: along dart {dart}, edge {edge}")
        self.dart = dart
        self.edge = edge


class NoCandidateError(ConnectionFailure):
    """No dart at the target satisfies the collinearity axiom."""


class AmbiguousCandidateError(ConnectionFailure):
    """Several darts at the target satisfy the collinearity axiom."""


class PreconditionError(GKMError):
    """An operation was called on a graph outside its domain."""


class FaceFamilyError(GKMError):
    """A face family is not closed under the operations a check needs."""


class JoinUndefinedError(FaceFamilyError):
    """Two intersecting faces have no least common face in the family."""


class BooleanIntervalViolation(GKMError):
    """A lower interval of a dual poset is not a boolean lattice."""

    def __init__(self, element: str, reason: str) -> None:
        super().__init__(f"Interval below {element} is not boolean: {reason}")
        self.element = element


class FacetConsistencyError(GKMError):
    """A color-deleted component failed the facet checks."""


class InconsistentEtaError(GKMError):
    """Per-vertex linear relations disagree on a shared facet."""


class ZeroCoefficientError(GKMError):
    """A facet received a vanishing coefficient in the linear form."""


class CongruenceError(GKMError):
    """A class that must be a GKM class violates an edge congruence."""

    def __init__(self, message: str, edge: str) -> None:
        super().__init__(f"{message} [{edge}]")
        self.edge = edge
