"""Exception types shared across the package."""


class BudgetError(RuntimeError):
    """An exhaustive enumeration would exceed its documented hard cap."""


class ConsistencyError(RuntimeError):
    """An internal well-definedness check failed.

    The transforms between subset colorings and graphs carry conditions that
    are provably mutually exclusive; tripping this means a bug in the
    implementation, not bad input.
    """


class ParseError(ValueError):
    """Malformed text input, annotated with a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
