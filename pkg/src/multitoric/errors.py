"""Exception hierarchy shared by all modules."""


class ToricError(Exception):
    """Base class for every error raised by this package."""


class NotPrimePower(ToricError, ValueError):
    pass


class TooLarge(ToricError):
    """A work bound (field size, point count, monomial count...) was exceeded."""


class InvalidPartition(ToricError, ValueError):
    pass


class NotAnEdge(ToricError, ValueError):
    pass


class LengthMismatch(ToricError, ValueError):
    pass


class FieldMismatch(ToricError, ValueError):
    pass


class AmbientMismatch(ToricError, ValueError):
    pass


class InvalidConfig(ToricError, ValueError):
    pass


class InsufficientWeight(ToricError, ValueError):
    pass


class NotAdjacent(ToricError, ValueError):
    pass


class TooFewEdges(ToricError, ValueError):
    pass


class NoSwappableEdge(ToricError, ValueError):
    pass


class Unsupported(ToricError, ValueError):
    pass


class NotHomogeneous(ToricError, ValueError):
    pass
