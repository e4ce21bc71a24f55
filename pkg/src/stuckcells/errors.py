"""Exception hierarchy shared by every module of the package."""


class StuckCellsError(Exception):
    """Base class for all package errors."""


class InvalidAlphabetError(StuckCellsError, ValueError):
    pass


class ContextKindError(StuckCellsError, TypeError):
    """A field operation was requested on a plain mod-q ring."""


class ParameterError(StuckCellsError, ValueError):
    pass


class CapabilityExceededError(StuckCellsError, ValueError):
    """The defect pattern is outside what the codec can mask."""


class UnmaskablePatternError(StuckCellsError, ValueError):
    pass


class UnmaskableColumnError(UnmaskablePatternError):
    pass


class ClaimedDistanceError(StuckCellsError, ValueError):
    pass


class RankError(StuckCellsError, ValueError):
    pass


class TooLargeError(StuckCellsError, ValueError):
    """An exhaustive computation would exceed its size guard."""


class InternalInvariantError(StuckCellsError, AssertionError):
    """Raised when a guaranteed-by-construction property fails."""
