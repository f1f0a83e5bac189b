class RhoError(Exception):
    """Base class for every error raised by the rho-partitions package."""


class InvalidParameter(RhoError, ValueError):
    """A numeric argument is outside its allowed range (ell < 2, k < 1, N < 0, ...)."""


class NotAUnit(RhoError, ValueError):
    """Series inversion needs a constant term of +1 or -1."""


class IndexBeyondOrder(RhoError, IndexError):
    """A coefficient past the truncation order was requested."""


class NotAPredicateFamily(RhoError, ValueError):
    """Membership was asked of a decorated family; use decoration_weight instead."""


class NoSeriesForm(RhoError, ValueError):
    """The family has no closed eta-quotient generating function."""


class OddArgument(RhoError, ValueError):
    """The operation is only defined for even n."""


class BudgetExceeded(RhoError, ValueError):
    """An enumeration oracle was asked to go past its configured bound."""


class UsageError(RhoError, ValueError):
    """Bad command-line input. The CLI exits with status 2."""
