"""Exception taxonomy for stmodcat.

Every failure mode that callers are expected to handle gets its own class so
that tests and the CLI can match on type rather than message text.
"""


class StmodcatError(Exception):
    """Base class for all package errors."""


class NotPrime(StmodcatError):
    """A field characteristic was not a prime number."""


class FieldTooLarge(StmodcatError):
    """Requested field size exceeds the supported table-driven range."""


class NoSuchRoot(StmodcatError):
    """The field contains no primitive root of the requested order."""


class NotSquare(StmodcatError):
    """A square matrix was required."""


class FieldMismatch(StmodcatError):
    """Operands live over different fields."""


class OrderTooLarge(StmodcatError):
    """Requested group order exceeds the supported bound."""


class BadSpec(StmodcatError):
    """A group or module specification string could not be parsed."""


class PrimeDoesNotDivide(StmodcatError):
    """The field characteristic does not divide the group order."""


class Mismatch(StmodcatError):
    """Matrix shapes or module dimensions are incompatible."""


class DecompositionFailed(StmodcatError):
    """Indecomposable-summand search exhausted its retry budget."""


class CharMismatch(StmodcatError):
    """Module field characteristic is incompatible with the operation."""


class FieldTooSmall(StmodcatError):
    """A splitting field is needed; the message names the required degree."""


class NotFiniteType(StmodcatError):
    """The algebra has infinitely many indecomposables; catalog is bounded."""

    def __init__(self, message, catalog=None):
        super().__init__(message)
        self.catalog = catalog


class SylowNotNormal(StmodcatError):
    """The requested criterion needs a normal Sylow p-subgroup."""


class NotInThickK(StmodcatError):
    """Module lies outside the thick subcategory generated by k."""


class UnknownSpec(StmodcatError):
    """Unrecognized group specification label."""


class UnknownCase(StmodcatError):
    """Unrecognized case-study name."""


class ResourceLimit(StmodcatError):
    """A configured dimension/size/retry budget was exceeded."""


class InvalidWord(StmodcatError):
    """A string-module word violates the alternation or run-length rules."""
