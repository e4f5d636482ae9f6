"""Exception hierarchy; each class maps to one CLI exit code."""

from __future__ import annotations


class TricutError(Exception):
    exit_code = 1


class InputError(TricutError, ValueError):
    """Malformed input: bad vertex id, not an edge, parse failure."""

    exit_code = 1


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AnalysisError(TricutError):
    """The graph violates an analysis precondition (not triconnected, too small)."""

    exit_code = 2


class IntegrityError(TricutError, AssertionError):
    """A structural theorem failed on concrete data. Always a bug."""

    exit_code = 3

    def __init__(self, message: str, witness=None):
        self.witness = witness
        if witness is not None:
            message = f"{message} (witness: {witness!r})"
        super().__init__(message)
