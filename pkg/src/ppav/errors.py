"""Exception hierarchy shared by every module."""


class PpavError(Exception):
    """Base class for all library errors."""


class SingularMatrix(PpavError, ZeroDivisionError):
    pass


class NotSymmetric(PpavError, ValueError):
    pass


class DimensionMismatch(PpavError, ValueError):
    pass


class OddDimension(DimensionMismatch):
    pass


class NotSymplectic(PpavError, ValueError):
    pass


class NotInvolution(PpavError, ValueError):
    pass


class InternalInconsistency(PpavError, AssertionError):
    """An invariant that must hold for correct input failed; indicates a bug."""


class CapExceeded(PpavError):
    """Group closure grew past the configured cap.

    The partial count is a lower bound on the group order, not a soundness
    failure.
    """

    def __init__(self, partial_size, cap):
        super().__init__(f"closure exceeded cap {cap} (reached {partial_size} elements)")
        self.partial_size = partial_size
        self.cap = cap


class ImaginaryPartNotPositiveDefinite(PpavError, ValueError):
    pass


class SingularFactor(SingularMatrix):
    """A + ZC is not invertible for the given (R, Z) pair."""


class StratumMismatch(PpavError, ValueError):
    pass


class IndexOutOfRange(PpavError, ValueError):
    pass


class PreconditionViolated(PpavError, ValueError):
    pass


class OddG(PreconditionViolated):
    pass


class EvenG(PreconditionViolated):
    pass


class HyperellipticCase(PreconditionViolated):
    pass


class NotPrime(PpavError, ValueError):
    pass


class EvenModulus(PpavError, ValueError):
    pass


class VerificationFailed(PpavError):
    """A certificate edge failed re-verification."""

    def __init__(self, edge_index, reason):
        super().__init__(f"edge {edge_index}: {reason}")
        self.edge_index = edge_index
        self.reason = reason
