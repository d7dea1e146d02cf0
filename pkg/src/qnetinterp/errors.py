"""Exception hierarchy shared by every stage of the interpreter."""

from __future__ import annotations


class InterpreterError(Exception):
    """Base class for all interpreter failures."""


class ParseError(InterpreterError, ValueError):
    """Input text is not well-formed JSON."""


class FormatError(ParseError):
    """Input is valid JSON but not in an accepted shape."""


class ValidationError(InterpreterError, ValueError):
    """Input is well-formed but violates a domain invariant."""


class InputIOError(InterpreterError, OSError):
    """A source file could not be read or an output file could not be written."""

    def __init__(self, path, reason: str) -> None:
        self.path = str(path)
        super().__init__(f"{self.path}: {reason}")


class MatchingDomainError(InterpreterError, ValueError):
    """The graph admits no perfect matchings by construction (odd vertex count)."""


class ResourceLimitError(InterpreterError, RuntimeError):
    """Exhaustive enumeration was refused because the graph exceeds the vertex cap."""
