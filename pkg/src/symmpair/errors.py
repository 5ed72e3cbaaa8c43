"""Exception hierarchy. Each class maps to one CLI exit code."""


class SymmPairError(Exception):
    exit_code = 1


class InputError(SymmPairError, ValueError):
    """Malformed input: bad Cartan data, dimension mismatch, bad involution."""

    exit_code = 2


class CartanError(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class InvalidInvolution(InputError):
    pass


class BudgetExceeded(SymmPairError):
    """Raised instead of starting an enumeration that is too large.

    ``estimate`` carries the size that would have been enumerated and
    ``partial`` any results computed before the refusal.
    """

    exit_code = 3

    def __init__(self, message, estimate=None, budget=None, partial=None):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget
        self.partial = partial


class PreconditionError(SymmPairError, ValueError):
    exit_code = 4


class NotDominant(PreconditionError):
    pass


class NotTwisted(PreconditionError):
    pass
