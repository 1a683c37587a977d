"""Error types shared across the package."""


class InputError(ValueError):
    """Malformed or rejected user input (bad file, bad flag, violated precondition)."""


class ParseError(InputError):
    """Input error with a file position attached."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where = f" ({where})"
        super().__init__(message + where)


class InternalCheckError(RuntimeError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""
