"""Exception types shared across the toolkit.

Every class also derives from the matching builtin so callers that only
know about ``ValueError``/``KeyError``/``RuntimeError`` keep working.
"""

from __future__ import annotations

from typing import Optional


class HCordialError(Exception):
    """Base class for toolkit errors."""


class GraphError(HCordialError, ValueError):
    """A graph could not be constructed (loop, duplicate, out-of-range pair)."""


class GraphFormatError(GraphError):
    """Malformed graph or labeled-graph text."""


class PreconditionError(HCordialError, ValueError):
    """A documented precondition or parity obstruction rejected the input.

    Attributes:
        reason: short machine-friendly name of the failed condition
        citation: the statement the rejection rests on
    """

    def __init__(self, message: str, reason: str, citation: Optional[str] = None):
        super().__init__(message)
        self.reason = reason
        self.citation = citation


class LabelingError(HCordialError, ValueError):
    """A labeling does not fit its graph (wrong label count, zero label)."""


class AlphabetError(LabelingError):
    """A label lies outside the alphabet of the requested labeling kind."""

    def __init__(self, message: str, edge: tuple[int, int], label: int):
        super().__init__(message)
        self.edge = edge
        self.label = label


class ConstructionError(HCordialError, RuntimeError):
    """A constructor's own output failed verification."""

    def __init__(self, message: str, violations: Optional[list] = None):
        super().__init__(message)
        self.violations = list(violations or [])


class SearchInvariantError(HCordialError, RuntimeError):
    """The oracle produced a witness that does not verify."""


class UnknownEntryError(HCordialError, KeyError):
    """Unknown catalog entry name."""

    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else "unknown catalog entry"
