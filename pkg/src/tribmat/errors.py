"""Exception types shared across the package."""


class TribmatError(Exception):
    """Base class for all library errors."""


class InvalidRangeError(TribmatError, ValueError):
    """A range was given with lo > hi."""


class OutOfDomainError(TribmatError, ValueError):
    """An index or parameter lies outside an operation's domain."""


class UnknownIdentityError(TribmatError, ValueError):
    """An identity name not present in the verification registry."""


class InternalInconsistencyError(TribmatError, ArithmeticError):
    """A proved divisibility or branch constraint failed; indicates a bug."""


class PrecisionError(TribmatError, ArithmeticError):
    """Working precision was insufficient (rounding margin or cross-check)."""


class UndefinedRatioError(TribmatError, ZeroDivisionError):
    """Consecutive-term ratio requested at an index where the denominator is 0."""


class BenchConsistencyError(TribmatError, ArithmeticError):
    """Benchmark methods disagreed on a value; no timings are reported."""
