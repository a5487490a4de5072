"""Exception hierarchy shared by every stage of the solver."""


class ParetoFlowError(Exception):
    """Base class for all solver errors."""


class NetworkError(ParetoFlowError):
    pass


class UnbalancedSupply(NetworkError):
    pass


class DisconnectedGraph(NetworkError):
    pass


class SelfLoop(NetworkError):
    pass


class LengthMismatch(NetworkError):
    pass


class CostError(ParetoFlowError):
    pass


class OutOfDomain(CostError):
    pass


class MalformedRational(CostError):
    pass


class GapInSegments(CostError):
    pass


class OverlappingSegments(CostError):
    pass


class LinalgError(ParetoFlowError):
    pass


class NotUnimodular(LinalgError):
    pass


class NoUnimodularBasis(LinalgError):
    """No column subset of A has determinant +-1.

    ``inconclusive`` is True when the exhaustive search hit its cap before
    every subset was examined.
    """

    def __init__(self, message, inconclusive=False):
        super().__init__(message)
        self.inconclusive = inconclusive


class PolyError(ParetoFlowError):
    pass


class ResourceCap(PolyError):
    pass


class NonIntegerRoot(PolyError):
    pass


class CapExceeded(ParetoFlowError):
    pass


class SchemaError(ParetoFlowError):
    """Instance document does not match the schema; ``path`` locates the fault."""

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path
