from __future__ import annotations


class PaslError(RuntimeError):
    """Base class for every error raised by the package."""


class InvalidAlgebra(PaslError, ValueError):
    pass


class InputFormatError(PaslError, ValueError):
    pass


class NonHomogeneousInput(PaslError):
    pass


class NonTerminatingRewrite(PaslError):
    pass


class ZeroElement(PaslError):
    pass


class DegreeMismatch(PaslError):
    pass


class NoFinitePresentation(PaslError):
    pass


class IncompatiblePair(PaslError):
    pass


class UnsupportedZeroDivisorLeadingTerm(PaslError):
    pass


class ZeroDivisorLeadingTerm(PaslError):
    pass


class InternalConsistencyError(PaslError):
    """A computed object failed a check the theory guarantees (usually an invalid order)."""
