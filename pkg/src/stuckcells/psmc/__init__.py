"""Partially stuck-at masking constructions."""

from .construction1 import (
    C1BCodec,
    C1Codec,
    Gen1Codec,
    c1_decode,
    c1_encode,
    c1b_decode,
    c1b_encode,
    gen1_decode,
    gen1_encode,
)
from .construction2 import (
    C2Codec,
    RreMaskCodec,
    WitnessReport,
    all_subsets_maskable,
    c2_capability,
    c2_decode,
    c2_encode,
    rre_mask_solve,
    stuck_rre_maskable,
    verify_witness,
)
from .construction3 import (
    DecodeTrace,
    EncodeTrace,
    Gen3Codec,
    c3_decode,
    c3_decode_trace,
    c3_encode,
    c3_encode_trace,
    gen3_decode,
    gen3_encode,
    gen3_encode_trace,
    gen3_redundancy,
    gen3s_decode,
    gen3s_encode,
    gen3s_encode_trace,
    sigma,
    u_tilde_levels,
    u_tilde_same,
)

__all__ = [name for name in dir() if not name.startswith("_")]
