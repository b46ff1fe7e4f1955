"""Errors raised while reading session input."""


class InputSyntaxError(ValueError):
    """Malformed session text at a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownNameError(ValueError):
    """A command refers to an ideal or module the session never defined."""

    def __init__(self, name: str):
        super().__init__(f"Unknown ideal or module {name!r}")
        self.name = name
