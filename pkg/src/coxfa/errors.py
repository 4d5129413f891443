class CoxeterError(Exception):
    """Base class for domain errors (bad input, violated preconditions)."""


class ParseError(CoxeterError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(CoxeterError):
    """A search hit its size cap. This is never a proof of infiniteness."""


class ClosureTooLarge(CapExceeded):
    pass


class GroupTooLarge(CapExceeded):
    pass
