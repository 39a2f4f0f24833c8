"""
Exception hierarchy shared by the solvers, parsers and the command line.

The command line maps ``InputError`` to exit code 2 and
``ResourceLimitError`` to exit code 3.
"""

from __future__ import annotations

from typing import Optional


class BriberyError(Exception):
    """Base class for every error raised by this package."""


class InputError(BriberyError, ValueError):
    """Malformed input or a violated precondition."""


class ParseError(InputError):
    """A file could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(InputError):
    """The operation is undefined for the given election (e.g. Maximin with one candidate)."""


class RegimeError(InputError):
    """No algorithm applicable to the instance under the requested regime."""


class ResourceLimitError(BriberyError, RuntimeError):
    """
    A search exceeded its node limit.

    Attributes
    ----------
    nodes : int
        Number of search nodes visited before giving up.
    best_cost : int or float or None
        Cost of the best dethroning shift vector found so far (None if none was found).
    best_shifts : tuple of int or None
        The corresponding shift vector.
    """

    def __init__(self, message: str, nodes: int, best_cost=None, best_shifts=None):
        self.nodes = nodes
        self.best_cost = best_cost
        self.best_shifts = best_shifts
        super().__init__(f"{message} (nodes visited: {nodes}, best cost found: {best_cost})")
