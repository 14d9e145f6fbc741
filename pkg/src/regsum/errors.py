"""Exception hierarchy shared by every module."""


class RegsumError(Exception):
    """Base class for all errors raised by regsum."""


class InvalidArgument(RegsumError, ValueError):
    pass


class NotQuasiOdd(InvalidArgument):
    pass


class NotQuasiEven(InvalidArgument):
    pass


class PoleAtOne(InvalidArgument):
    pass


class DomainViolation(RegsumError, ValueError):
    """Numeric evaluation requested outside an admissible theta window."""


class InternalInconsistency(RegsumError, AssertionError):
    """Two independent routes disagreed. Indicates a bug."""


class ParseError(RegsumError, ValueError):
    """An expression failed to lex, parse or classify.  pos is a 0-based offset."""

    def __init__(self, message: str, pos: int = 0):
        super().__init__(message)
        self.message = message
        self.pos = pos

    @property
    def column(self) -> int:
        return self.pos + 1

    def __str__(self) -> str:
        return f"line 1, col {self.column}: {self.message}"


class LexError(ParseError):
    pass


class ExprSyntaxError(ParseError):
    pass


class UnsupportedClass(ParseError):
    """Well-formed input with no matching summation or limit class."""

    def __init__(self, message: str, pos: int = 0, factor: str = ""):
        super().__init__(message, pos)
        self.factor = factor
