"""Exception hierarchy shared by every numsg module."""


class NumsgError(Exception):
    """Base class for all errors raised by numsg."""


class InvalidSemigroup(NumsgError, ValueError):
    pass


class NotClosed(InvalidSemigroup):
    """Two members sum to a gap at or below the Frobenius number."""


class FrobeniusViolated(InvalidSemigroup):
    """The declared Frobenius number was listed as a member."""


class BudgetExceeded(NumsgError):
    """A configured node or wall-clock budget ran out mid-search."""


class OutOfBudget(BudgetExceeded):
    """The request is beyond the hard size limit of a brute-force routine."""


class FTooSmall(NumsgError, ValueError):
    """The closed-form class counts only hold for f > 6*Max(Y) + 6."""


class InvalidPair(NumsgError, ValueError):
    """A (Y, Z) pair violates Y nonempty, Z inside [0, Max(Y)], Y and Z disjoint."""


class NotDepth3(NumsgError, ValueError):
    pass
