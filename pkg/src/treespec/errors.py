"""Exception hierarchy shared by all treespec modules."""


class TreeSpecError(Exception):
    pass


class NegativeEntry(TreeSpecError, ValueError):
    pass


class BothZero(TreeSpecError, ValueError):
    pass


class TooLarge(TreeSpecError, ValueError):
    """Raised when a request exceeds the configured enumeration budget."""


class InvalidEdge(TreeSpecError, IndexError):
    pass


class DegreeTooHigh(TreeSpecError, ValueError):
    pass


class NotDecodable(TreeSpecError, ValueError):
    pass


class EmptyInput(TreeSpecError, ValueError):
    pass


class Infeasible(TreeSpecError, ValueError):
    pass


class NotCoprime(TreeSpecError, ValueError):
    pass


class NotFound(TreeSpecError, LookupError):
    pass


class BadColumn(TreeSpecError, ValueError):
    pass


class MalformedWord(TreeSpecError, ValueError):
    pass


class NonInvertibleDenominator(TreeSpecError, ZeroDivisionError):
    pass
