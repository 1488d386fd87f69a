"""Exception types raised across the package.

The CLI maps `DomainError` to exit code 2 and `InconsistencyError` to exit
code 3.
"""

from typing import Any, Dict, Optional


class SasakiJoinError(Exception):
    """Base class for all errors raised by `sasakijoin`."""


class DomainError(SasakiJoinError, ValueError):
    """Input outside the domain of an operation."""


class NotIsolatingError(DomainError):
    """An interval does not bracket a sign change of the square-free part."""


class NoTransitionError(SasakiJoinError):
    """No admissibility transition was found in a scan range."""


class InconsistencyError(SasakiJoinError, RuntimeError):
    """Two independent constructions of the same object disagree.

    Args:
        message: Human-readable description.
        payload: The disagreeing objects, keyed by construction route.
    """

    def __init__(
        self, message: str, payload: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message)
        self.payload = payload or dict()
