"""Exception hierarchy shared by all superdirac modules."""


class SuperDiracError(Exception):
    """Base class for every error raised by this package."""


class RankError(SuperDiracError, ValueError):
    pass


class ResourceLimitError(SuperDiracError):
    """A requested computation exceeds a configured size limit."""


class RegularityError(SuperDiracError, ValueError):
    def __init__(self, message, coordinates=()):
        super().__init__(message)
        self.coordinates = tuple(coordinates)


class DominanceError(SuperDiracError, ValueError):
    pass


class SpinorialWeightError(SuperDiracError, ValueError):
    """Highest weight with odd last Dynkin label (spin representation of o(2n+1))."""


class ParityError(SuperDiracError, ValueError):
    pass


class InexactDivisionError(SuperDiracError, ArithmeticError):
    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ExpansionError(SuperDiracError, ArithmeticError):
    pass


class StructureError(SuperDiracError):
    """A structural identity (Jacobi, invariance, centrality, ...) failed."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class OrderTooSmallError(SuperDiracError, ValueError):
    pass
