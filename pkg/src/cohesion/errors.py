"""Exception types shared across the package."""


class CohesionError(Exception):
    """Base class for errors raised by this package."""


class EdgeListParseError(CohesionError):
    """A malformed line was found while parsing an edge list."""

    def __init__(self, line_number: int, line: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: expected two tokens, got {line!r}")


class BudgetExceededError(CohesionError):
    """An enumeration or construction exceeded its configured budget."""


class DegenerateInputError(CohesionError):
    """Input too small for the requested computation (e.g. covariance of <2 rows)."""


class UndefinedScoreError(CohesionError):
    """Accuracy scores are undefined (no valid query node)."""
