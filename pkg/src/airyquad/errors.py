"""Exception hierarchy shared by all evaluators."""


class AiryQuadError(Exception):
    """Base class for every error raised by the package."""


class NonConvergence(AiryQuadError):
    """A series, iteration or refinement failed to reach its target.

    ``result`` carries the best available value when one exists.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class DomainError(AiryQuadError, ValueError):
    pass


class InvalidInterval(DomainError):
    pass


class DegreeOutOfRange(DomainError):
    pass


class UnsupportedEta(DomainError):
    pass


class BranchError(NonConvergence):
    """Newton iterate crossed the cut of the principal logarithm."""


class OutOfRange(DomainError):
    """An oracle was asked for a value outside its trusted range."""


class ParseError(AiryQuadError, ValueError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
