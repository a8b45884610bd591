"""Exception hierarchy shared by every module."""


class TilingError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(TilingError, ValueError):
    pass


class ResourceLimitError(TilingError):
    """A computation would exceed one of the configured guards."""


class RegionParseError(TilingError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotApplicableError(TilingError):
    """A strip or corner does not fit inside the region."""

    def __init__(self, message: str, cell=None):
        super().__init__(message)
        self.cell = cell


class PreconditionError(TilingError):
    """A reduction was requested where its hypotheses do not hold."""
