"""Exception types shared across the package."""


class CritdigraphError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(CritdigraphError, ValueError):
    """An argument lies outside its documented domain."""


class StructureError(CritdigraphError, ValueError):
    """An input digraph violates a structural precondition."""


class ResourceLimitError(CritdigraphError, RuntimeError):
    """A computation would exceed an explicit resource guard."""


class FormatError(CritdigraphError, ValueError):
    """Malformed digraph text input.  Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
