"""Exception hierarchy shared by every module."""


class TropError(Exception):
    """Base class for all errors raised by tropdual."""


class DimensionError(TropError, ValueError):
    """Vector lengths disagree or fall below the supported minimum."""


class ShapeError(TropError, ValueError):
    """A matrix is ragged, empty where it must not be, or not square."""


class RankError(TropError, ValueError):
    """Rows expected to be linearly independent are not."""


class DomainError(TropError, ValueError):
    """A parameter lies outside its documented domain."""


class ContractError(TropError, ValueError):
    """A caller-supplied precondition does not hold."""
