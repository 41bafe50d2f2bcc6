"""Exception types shared across the package.

All data-facing errors carry enough context to point at the offending
input (a JSON path for fixture files, a named check for certification
failures), so callers can report failures without re-deriving them.
"""


class SpreadLabError(Exception):
    """Base class for all package errors."""


class ParseError(SpreadLabError):
    """Raised when an input document is not syntactically valid."""


class ValidationError(SpreadLabError):
    """Raised when a parsed document violates a semantic invariant.

    `path` locates the offending field, e.g. ``classes[3].size``.
    """

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


class DegreeMismatch(SpreadLabError):
    """Raised when permutations of different degrees are combined."""


class IdentityArgument(SpreadLabError):
    """Raised when an operation requires a non-identity element."""


class OrderExceedsCap(SpreadLabError):
    """Raised when group enumeration exceeds the configured order cap."""


class CountMismatch(SpreadLabError):
    """Raised when an expanded conjugate family has unexpected size."""


class MissingPowerMap(SpreadLabError):
    """Raised when a power computation needs an absent prime map."""


class TargetNotSylowCentral(SpreadLabError):
    """Raised when the trick target is not a declared Sylow-2-central class."""


class ResidualMismatch(SpreadLabError):
    """Raised when a certificate's expected residual disagrees with the table.

    `expected` and `actual` are sorted tuples of class names.
    """

    def __init__(self, expected, actual):
        self.expected = tuple(expected)
        self.actual = tuple(actual)
        super().__init__(
            f"residual mismatch: expected {list(self.expected)}, got {list(self.actual)}"
        )


class BudgetExhausted(SpreadLabError):
    """Raised internally when a search runs out of node or time budget."""

    def __init__(self, message, lower_bound=None, upper_bound=None, witness=None):
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.witness = witness
        super().__init__(message)


class OutOfRange(SpreadLabError):
    """Raised for parameters outside a formula's validity range."""
