"""
Exception hierarchy for starcat.

Every engine failure derives from StarcatError so callers (and the CLI)
can tell precondition violations apart from programming errors.
"""


class StarcatError(Exception):
    """Base class for all engine errors."""

    pass


class RingMismatchError(StarcatError):
    """Raised when values from two different scalar rings are combined."""

    pass


class DivisionByZeroError(StarcatError, ZeroDivisionError):
    """Raised when inverting a zero scalar."""

    pass


class NotHermitianError(StarcatError):
    """Raised when an operation requires a self-adjoint value."""

    pass


class ZeroInputError(StarcatError):
    """Raised when an operation is undefined at zero."""

    pass


class ShapeMismatchError(StarcatError):
    """Raised when domains, codomains or matrix shapes do not line up."""

    pass


class NotClosedMonoError(StarcatError):
    """Raised when adjoint(s)·s is not invertible."""

    pass


class NoSolutionError(StarcatError):
    """Raised when a linear system has no exact solution."""

    pass


class NotSplitError(StarcatError):
    """Raised when a wide cospan has no joint retraction."""

    pass


class NotPositiveDefiniteError(StarcatError):
    """Raised when a Gram matrix is not positive definite."""

    pass


class NotMonoError(StarcatError):
    """Raised when a subobject representative is not monic."""

    pass


class NotEndoError(StarcatError):
    """Raised when a morphism is expected to have dom == cod."""

    pass


class SingularError(StarcatError):
    """Raised when inverting a morphism that is not invertible."""

    pass


class PreconditionFailedError(StarcatError):
    """Raised when an order-theoretic precondition does not hold."""

    pass


class NotContractionError(StarcatError):
    """Raised when adjoint(f)·f ≤ 1 fails."""

    pass


class NotStrictContractionError(StarcatError):
    """Raised when adjoint(f)·f ≺ 1 fails."""

    pass


class NotPartialIsometryError(StarcatError):
    """Raised when f·f*·f ≠ f."""

    pass


class NotSameSubjectError(StarcatError):
    """Raised when two codilations dilate different morphisms."""

    pass


class NotIsometryError(StarcatError):
    """Raised when an isometry is required but f*·f ≠ 1."""

    pass


class GenerationError(StarcatError):
    """Raised when a random generator exhausts its retry budget."""

    pass


class VerificationError(StarcatError):
    """Raised when a constructed result fails its own re-check."""

    pass


class LiteralParseError(StarcatError, ValueError):
    """Raised when a scalar literal cannot be parsed in its ring."""

    pass


class DocumentError(StarcatError):
    """Raised when a document refers to an unknown object or morphism."""

    pass
