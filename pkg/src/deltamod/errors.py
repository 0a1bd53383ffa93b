"""Exception types shared across the package."""


class DeltamodError(Exception):
    """Base class for every error raised by this package."""


class ParseError(DeltamodError):
    """Input text could not be parsed into a ring or module description."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class AxiomViolation(DeltamodError):
    """An algebraic axiom failed during exhaustive validation.

    ``witness`` holds the concrete elements (coefficient vectors) on which
    the axiom fails, so the failure can be replayed by hand.
    """

    def __init__(self, axiom: str, witness):
        super().__init__(f"axiom {axiom!r} fails at witness {witness!r}")
        self.axiom = axiom
        self.witness = witness


class SizeBoundExceeded(DeltamodError):
    """A ring or module is larger than the configured size bound."""


class NodeBoundExceeded(DeltamodError):
    """A submodule lattice grew past the configured node bound."""


class RingMismatch(DeltamodError):
    """Two modules over different rings were combined."""


class ParentMismatch(DeltamodError):
    """Two submodules of different parent modules were combined."""


class PreconditionViolation(DeltamodError):
    """An operation was invoked on arguments outside its contract."""


class NotDeltaSupplemented(PreconditionViolation):
    """Operation requires a delta-supplemented module."""


class SearchBoundExceeded(DeltamodError):
    """An exhaustive search space is larger than the configured bound."""


class InternalInconsistency(DeltamodError):
    """Two independent computations of the same value disagree.

    This always signals an implementation bug, never bad user input.
    """
