"""Exception types shared across the package."""


class AugCubeError(Exception):
    """Base class for all package errors."""


class ArgumentError(AugCubeError, ValueError):
    """An index, vertex or parameter is outside its valid range."""


class UnsupportedDimension(ArgumentError):
    """The operation is not defined (or not claimed) for this dimension."""


class CapacityError(AugCubeError):
    """The request exceeds a documented size or time budget."""


class ParseError(AugCubeError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ReportError(AugCubeError, ValueError):
    """A serialized report does not match the expected schema."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
