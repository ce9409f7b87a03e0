"""Error types shared by the file parsers."""

from __future__ import annotations


class ParseError(ValueError):
    """A malformed input file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
