"""Exception hierarchy shared by every module of the package."""


class CylHookError(ValueError):
    """Base class; the CLI maps every subclass to exit status 2."""


class BadLength(CylHookError):
    pass


class NotWeaklyDecreasing(CylHookError):
    pass


class NotRestricted(CylHookError):
    pass


class NotContained(CylHookError):
    pass


class CellNotInDiagram(CylHookError):
    pass


class NotActive(CylHookError):
    pass


class InvalidTuple(CylHookError):
    pass


class BadEndpoints(CylHookError):
    pass


class BadSequence(CylHookError):
    pass


class InsufficientData(CylHookError):
    pass


class NotRepresentable(CylHookError):
    pass
