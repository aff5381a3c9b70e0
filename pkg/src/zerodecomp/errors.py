"""Exception hierarchy shared by all modules."""


class ZeroDecompError(Exception):
    """Base class for every error raised by this package."""


class UsageError(ZeroDecompError, ValueError):
    """Invalid arguments (mismatched rings, bad bound, constant divisor...)."""


class DegenerateInputError(ZeroDecompError, ValueError):
    """Operation undefined on the zero polynomial or a constant."""


class UnsupportedInputError(ZeroDecompError):
    """Input outside the supported class, e.g. a multivariate polynomial
    handed to a univariate-only routine.  Callers usually fall back."""


class NotZeroDimensionalError(ZeroDecompError):
    pass


class CapExceededError(ZeroDecompError):
    """Dual space dimensions did not stabilise below the order cap."""


class PointNotZeroError(ZeroDecompError, ValueError):
    pass


class ParseError(ZeroDecompError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
