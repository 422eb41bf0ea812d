"""Exception hierarchy shared by every layer of the engine."""


class LiePoissonError(Exception):
    """Base class for all errors raised by this package."""


class MissingAssignment(LiePoissonError, KeyError):
    """A polynomial was evaluated without a value for one of its variables."""


class ParseError(LiePoissonError, ValueError):
    pass


class DimensionMismatch(LiePoissonError, ValueError):
    pass


class JacobiError(LiePoissonError):
    """Structure constants violate the Jacobi identity."""


class NotAnIdeal(LiePoissonError):
    pass


class NilradicalUnverified(LiePoissonError):
    pass


class InconsistentStructure(LiePoissonError):
    pass


class UnknownName(LiePoissonError, KeyError):
    pass


class ParityViolation(LiePoissonError):
    pass


class AllPointsSingular(LiePoissonError):
    pass


class NotVerifiedInvariant(LiePoissonError):
    pass


class RetryBudgetExhausted(LiePoissonError):
    def __init__(self, message, achieved_rank=None, target=None):
        super().__init__(message)
        self.achieved_rank = achieved_rank
        self.target = target


class PreconditionFailed(LiePoissonError):
    pass


class NoDimensionDrop(LiePoissonError):
    pass


class NotCommutativeIdeal(LiePoissonError):
    pass


class Unsupported(LiePoissonError):
    pass
