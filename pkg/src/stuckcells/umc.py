"""Cells with unreachable upper levels, handled by complementing a masking code.

A cell that cannot exceed ``s~`` becomes, after ``x -> q - 1 - x``, a cell
that cannot go below ``q - 1 - s~``. Any partially stuck-at code therefore
serves unreachable-level cells with the same redundancy.
"""

from __future__ import annotations

from typing import Sequence

from .codec import Codec, CodecDescriptor, Constraint, Construction
from .errors import ParameterError
from .smc import PsaPattern

Word = tuple[int, ...]


def complement(q: int, y: Sequence[int]) -> Word:
    return tuple(q - 1 - x for x in y)


def dual_pattern(q: int, pattern: PsaPattern) -> PsaPattern:
    """Minimum levels ``q - 1 - s~``; cells with ``s~ = q - 1`` carry no constraint and are dropped."""
    if any(not 0 <= s < q for s in pattern.levels):
        raise ParameterError(f"maximum levels must lie in [0, {q})")
    pairs = [(p, q - 1 - s) for p, s in pattern.pairs() if s < q - 1]
    return PsaPattern(tuple(p for p, _ in pairs), tuple(s for _, s in pairs))


def _require_min(inner: Codec) -> None:
    if inner.constraint is not Constraint.MIN:
        raise ParameterError("the inner codec must mask partially stuck-at (minimum-level) cells")


def umc_encode(inner: Codec, message: Sequence[int], pattern: PsaPattern) -> Word:
    """Encode so that every listed cell holds at most its maximum level."""
    _require_min(inner)
    return complement(inner.q, inner.encode(message, dual_pattern(inner.q, pattern)))


def umc_decode(inner: Codec, y: Sequence[int]) -> Word:
    _require_min(inner)
    return inner.decode(complement(inner.q, y))


class UmcCodec(Codec):
    construction = Construction.UMC
    constraint = Constraint.MAX

    def __init__(self, inner: Codec):
        _require_min(inner)
        self.inner = inner
        self.q, self.n = inner.q, inner.n

    @property
    def u_max(self):
        return self.inner.u_max

    def message_radices(self):
        return self.inner.message_radices()

    def level_choices(self):
        return tuple(sorted(self.q - 1 - s for s in self.inner.level_choices()))

    def admits(self, pattern):
        try:
            dual = dual_pattern(self.q, pattern)
        except ParameterError:
            return False
        return pattern.u <= self.u_max and self.inner.admits(dual)

    def encode(self, message, pattern):
        return umc_encode(self.inner, message, pattern)

    def decode(self, word):
        return umc_decode(self.inner, word)

    @property
    def descriptor(self):
        d = self.inner.descriptor
        return CodecDescriptor(
            self.construction,
            self.q,
            self.n,
            d.u_max,
            f"maxima dual to {d.levels}",
            d.redundancy,
            inner_code=d.inner_code,
            params={"inner": d.construction.value},
        )
