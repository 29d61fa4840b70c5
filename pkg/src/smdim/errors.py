"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SmdError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(SmdError, ValueError):
    """A family or formula was asked for outside its valid parameter range."""


class OutOfRangeError(InvalidParameterError):
    """A closed formula was evaluated outside the hypotheses it is proved for."""


class ParseError(SmdError, ValueError):
    """Malformed textual graph input.

    ``reason`` is a short machine-readable tag such as ``"malformed-line"``,
    ``"vertex-out-of-range"``, ``"self-loop"``, ``"bad-header"`` or
    ``"truncated-bits"``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class DisconnectedGraphError(SmdError, ValueError):
    def __init__(self, message: str = "graph is not connected"):
        super().__init__(message)


class TrivialGraphError(SmdError, ValueError):
    def __init__(self, message: str = "graph has a single vertex"):
        super().__init__(message)


class TooLargeError(SmdError):
    """An exact desk-scale routine was handed a graph above its size limit."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: {size} vertices exceeds the limit of {limit}")
        self.size = size
        self.limit = limit
