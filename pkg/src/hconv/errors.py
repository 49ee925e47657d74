"""Exception hierarchy shared by every module of the package."""


class HConvError(ValueError):
    """Base class for all library errors."""


class InvalidGrid(HConvError):
    pass


class InvalidExponent(HConvError):
    pass


class InvalidParams(HConvError):
    pass


class GridMismatch(HConvError):
    pass


class NodeNotOnGrid(HConvError):
    pass


class SingularSymbol(HConvError):
    """Raised when 1 + Hg vanishes (numerically) at some frequency node."""


class InvalidTime(HConvError):
    pass


class ExponentRelationViolated(HConvError):
    pass


class FormatError(HConvError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
