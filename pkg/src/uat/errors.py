"""Exception types shared across the package."""


class UATError(Exception):
    """Base class for all library errors."""


class MalformedExtension(UATError):
    pass


class ZeroDivisorDetected(UATError, ZeroDivisionError):
    """Inversion hit a nontrivial common factor with an extension modulus.

    ``factor`` is the discovered factor as a coefficient list (low to high)
    over the field one level below.
    """

    def __init__(self, message, factor):
        super().__init__(message)
        self.factor = factor


class InapplicableOperation(UATError):
    pass


class ParseError(UATError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownSymbol(ParseError):
    def __init__(self, name, line=1, column=1):
        super().__init__(f"unknown symbol {name!r}", line, column)
        self.name = name


class ExponentOverflow(UATError, OverflowError):
    pass


class BudgetExceeded(UATError):
    """A configured resource cap was hit; the answer is unknown.

    ``progress`` carries whatever partial-progress counters the raiser had.
    """

    def __init__(self, message, **progress):
        super().__init__(message)
        self.progress = progress


class FactorizationBudgetExceeded(BudgetExceeded):
    pass


class NotZeroDimensional(UATError):
    pass


class NotAnIdempotent(UATError):
    pass


class TrivialIdempotent(UATError):
    pass


class CertificateError(UATError):
    """A decomposition certificate failed one of its checks."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class ComaximalityFailure(CertificateError):
    pass


class IntersectionNotInRadical(CertificateError):
    pass


class ContainmentFailure(CertificateError):
    pass


class UnverifiedCertificate(CertificateError):
    pass


class HypothesisViolation(UATError):
    pass


class InternalInconsistency(UATError):
    pass


class WitnessRejected(UATError, ValueError):
    """A claimed witness failed its independent re-check."""
