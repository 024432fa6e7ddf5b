"""Exception hierarchy shared by all modules."""


class PolylogIdError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(PolylogIdError, ZeroDivisionError):
    pass


class NotExpandable(PolylogIdError, ValueError):
    """Rational function has a pole at x = 0."""


class InvalidIndex(PolylogIdError, ValueError):
    pass


class TooLarge(PolylogIdError, ValueError):
    pass


class DomainError(PolylogIdError, ValueError):
    pass


class NotPrime(PolylogIdError, ValueError):
    pass


class NotOddPrime(NotPrime):
    pass


class BadReduction(PolylogIdError, ValueError):
    """The curve is singular modulo the requested prime."""


class ParseError(PolylogIdError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateRecord(ParseError):
    pass


class NoData(PolylogIdError, LookupError):
    pass
