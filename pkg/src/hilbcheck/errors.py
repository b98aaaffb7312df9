"""Exception types shared across the package."""


class HilbcheckError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(HilbcheckError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)


class PreconditionError(HilbcheckError):
    """An operation was called outside its stated domain."""


class InfiniteColengthError(PreconditionError):
    """The quotient S/I is not finite dimensional."""
