"""Exception hierarchy shared by every module of the package."""


class KChevalleyError(ValueError):
    """Base class for all input and contract errors raised by the library."""


class InvalidCartan(KChevalleyError):
    pass


class UnsupportedRank(KChevalleyError):
    pass


class IndexOutOfRange(KChevalleyError, IndexError):
    pass


class DimensionMismatch(KChevalleyError):
    pass


class LengthMismatch(KChevalleyError):
    pass


class NotReduced(KChevalleyError):
    pass


class NotDominant(KChevalleyError):
    pass


class GroupTooLarge(KChevalleyError):
    pass
