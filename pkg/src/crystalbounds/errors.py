"""Exception types raised by the library."""


class InvalidRank(ValueError):
    pass


class LevelMismatch(ValueError):
    pass


class NotAMember(ValueError):
    pass


class VertexNotFound(KeyError):
    pass


class IterationLimitExceeded(RuntimeError):
    pass


class SearchLimitExceeded(RuntimeError):
    pass


class DegenerateSimplex(RuntimeError):
    pass


class CapTooLow(ValueError):
    """The enumerated graph does not reach far enough to certify a bound."""
