"""Codes for masking partially stuck-at, stuck-at and unreachable-level memory cells."""

from .codec import Codec, CodecDescriptor, Constraint, Construction, Redundancy
from .errors import (
    CapabilityExceededError,
    ClaimedDistanceError,
    ContextKindError,
    InternalInvariantError,
    InvalidAlphabetError,
    ParameterError,
    RankError,
    StuckCellsError,
    TooLargeError,
    UnmaskableColumnError,
    UnmaskablePatternError,
)
from .ring import AlphabetCtx, Kind, make_ctx, make_ring
from .smc import PsaPattern, SmcCodec, smc_decode, smc_encode

__version__ = "0.1.0"
