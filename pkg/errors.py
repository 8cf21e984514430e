#!/usr/bin/env python3
"""
Exception hierarchy for the ordered-matchings toolkit
"""

from typing import Any, Optional


class OrderedMatchingError(Exception):
    """Base class for every error raised by the library"""

    code = "ERROR"

    def __init__(self, message: str, **details: Any):
        """
        Initialize the error

        Args:
            message (str): Human readable description
            **details: Extra context kept for reports
        """
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message}


class DegreeTooLarge(OrderedMatchingError):
    code = "DEGREE_TOO_LARGE"


class DuplicateEdge(OrderedMatchingError):
    code = "DUPLICATE_EDGE"


class EndpointOutOfRange(OrderedMatchingError):
    code = "ENDPOINT_OUT_OF_RANGE"


class NonNormalizedEdge(OrderedMatchingError):
    code = "NON_NORMALIZED_EDGE"


class MalformedInput(OrderedMatchingError):
    code = "MALFORMED"


class InvalidArgument(OrderedMatchingError):
    code = "INVALID"


class UnsupportedSet(OrderedMatchingError):
    code = "UNSUPPORTED_SET"


class OutOfRange(OrderedMatchingError):
    code = "OUT_OF_RANGE"


class Unsupported(OrderedMatchingError):
    code = "UNSUPPORTED"


class NotApplicable(OrderedMatchingError):
    code = "NOT_APPLICABLE"


class WordLengthMismatch(OrderedMatchingError):
    code = "WORD_LENGTH_MISMATCH"


class UsageError(OrderedMatchingError):
    code = "USAGE"


class BudgetExceeded(OrderedMatchingError):
    """Raised when an exhaustive enumeration hits its node budget"""

    code = "BUDGET_EXCEEDED"

    def __init__(self, message: str, nodes: int = 0, partial: Optional[int] = None):
        super().__init__(message, nodes=nodes, partial=partial)
        self.nodes = nodes
        self.partial = partial
