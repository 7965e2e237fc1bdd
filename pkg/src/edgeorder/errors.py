"""Exception hierarchy shared by every module of the package."""


class ComplexError(ValueError):
    """Base class for all errors raised by :mod:`edgeorder`."""


class EmptyComplex(ComplexError):
    pass


class MixedDimension(ComplexError):
    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class DegenerateFacet(ComplexError):
    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class InvalidLabel(ComplexError):
    pass


class BadDimension(ComplexError):
    pass


class NotAFace(ComplexError):
    pass


class NotAFacet(NotAFace):
    pass


class NotAVertex(NotAFace):
    pass


class NotNormal(ComplexError):
    """The complex is not a normal closed 3-pseudomanifold."""


class HasBoundary(NotNormal):
    pass


class NotClosedSurface(ComplexError):
    pass


class BoundViolated(ComplexError):
    """A proven inequality failed; either the input is invalid or there is a bug."""


class GenusTooSmall(ComplexError):
    pass


class UnknownName(ComplexError):
    pass


class BadParam(ComplexError):
    pass


class ValidationFailed(ComplexError):
    """A construction produced something that is not a normal 3-pseudomanifold."""


class BadPairing(ComplexError):
    pass


class EdgeExists(ComplexError):
    pass


class NotInterior(ComplexError):
    pass


class LinkConditionFailed(ComplexError):
    pass


class BadPartition(ComplexError):
    pass


class BadIntersection(ComplexError):
    pass


class Undecided(ComplexError):
    """The isomorphism search exhausted its node budget."""


class ParseError(ComplexError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
