class DegturanError(Exception):
    """Base class for library errors."""


class GraphSizeError(DegturanError, ValueError):
    pass


class NotGraphicError(DegturanError, ValueError):
    pass


class Graph6Error(DegturanError, ValueError):
    pass


class PatternError(DegturanError, ValueError):
    pass


class NoPredictionError(DegturanError, LookupError):
    pass


class EnvelopeError(DegturanError, ValueError):
    pass


class BudgetExceeded(DegturanError, RuntimeError):
    """An enumeration would exceed its resource budget."""
