"""Exception types shared across the package."""


class OrdalgError(Exception):
    """Base class for all errors raised by ordalg."""


class DomainMismatchError(OrdalgError):
    """Operands belong to different scalar subgroups or group descriptors."""


class ShapeError(OrdalgError):
    """An element value does not match the shape required by its descriptor."""


class PreconditionError(OrdalgError):
    """A documented precondition of an operation is violated."""


class UnsupportedError(OrdalgError):
    """The requested descriptor/operation combination is not supported."""


class NoElementError(OrdalgError):
    """A requested witness element does not exist (e.g. empty open interval)."""


class ParseError(OrdalgError):
    """Syntax or semantic error in CLI input, annotated with a position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
