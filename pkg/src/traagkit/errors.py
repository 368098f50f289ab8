"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed text input (graph file, word, or generator map)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphParseError(ParseError):
    pass


class WordParseError(ParseError):
    pass


class MapParseError(ParseError):
    pass


class IncompleteSystemError(RuntimeError):
    """Raised when an operation needs a confluent system but completion ran
    out of budget; normal forms would not be unique."""
