"""Exception hierarchy shared by all modules."""


class CliffordError(Exception):
    """Base class for every error raised by this package."""


class Singular(CliffordError):
    pass


class FactorizationLimit(CliffordError):
    """The squarefree part of an integer could not be certified."""


class ResourceCap(CliffordError):
    """The quotient engine ran past a configured cap before stabilizing."""


class DegreeOverflow(CliffordError):
    pass


class NotGraded(CliffordError):
    pass


class NoNondegenerateSolution(CliffordError):
    pass


class Degenerate(CliffordError):
    pass


class ZeroParameter(CliffordError):
    pass


class NotInvertible(CliffordError):
    pass


class NoInvertibleSkew(CliffordError):
    pass


class InvalidAntiautomorphism(CliffordError):
    pass


class DimensionBoundExceeded(CliffordError):
    """A computed Clifford algebra is larger than its proven bound."""


class WrongDimension(CliffordError):
    pass


class NotCommutative(CliffordError):
    pass


class SpecError(CliffordError):
    """A problem description could not be parsed."""
