"""Masking cells stuck at exact values with a linear code.

With a code of minimum distance ``d`` any ``u <= d - 1`` stuck cells can be
matched: the encoder solves ``z . H_U = (s_i - w_{phi_i})_i`` and stores
``y = w + z . H``; the decoder reads ``z`` back from the check positions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .codec import Codec, CodecDescriptor, Constraint, Construction, Redundancy, split_message
from .codes import LinearCode
from .errors import CapabilityExceededError, InternalInvariantError, ParameterError
from .linalg import solve_left, vec_mat, vec_sub

Word = tuple[int, ...]


@dataclass(frozen=True)
class PsaPattern:
    """Defect state: sorted distinct positions and one level per position.

    The meaning of a level depends on the codec: an exact value for stuck-at
    cells, a minimum for partially stuck-at cells, a maximum for cells with
    unreachable levels.
    """

    positions: tuple[int, ...] = ()
    levels: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(int(p) for p in self.positions))
        object.__setattr__(self, "levels", tuple(int(s) for s in self.levels))
        if len(self.positions) != len(self.levels):
            raise ParameterError("positions and levels must have equal length")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise ParameterError("positions must be strictly increasing")
        if self.positions and self.positions[0] < 0:
            raise ParameterError("positions must be non-negative")

    @classmethod
    def uniform(cls, positions: Sequence[int], level: int) -> "PsaPattern":
        return cls(tuple(positions), (level,) * len(positions))

    @classmethod
    def from_pairs(cls, pairs) -> "PsaPattern":
        pairs = sorted(pairs)
        return cls(tuple(p for p, _ in pairs), tuple(s for _, s in pairs))

    @property
    def u(self) -> int:
        return len(self.positions)

    def pairs(self):
        return zip(self.positions, self.levels)

    def check_length(self, n: int) -> None:
        if self.positions and self.positions[-1] >= n:
            raise ParameterError(f"stuck position {self.positions[-1]} outside word of length {n}")

    def to_json(self) -> str:
        return json.dumps({"positions": list(self.positions), "levels": list(self.levels)})

    @classmethod
    def from_json(cls, text: str) -> "PsaPattern":
        data = json.loads(text)
        try:
            return cls(tuple(data["positions"]), tuple(data["levels"]))
        except (KeyError, TypeError) as exc:
            raise ParameterError(f"pattern JSON needs 'positions' and 'levels' lists: {exc}") from None


def place_message(code: LinearCode, m: Sequence[int]) -> list[int]:
    """Zeros on the check positions, the message on the info positions."""
    if len(m) != code.k:
        raise ParameterError(f"message length {len(m)} != k = {code.k}")
    if any(not 0 <= x < code.q for x in m):
        raise ParameterError(f"message symbols must lie in [0, {code.q})")
    w = [0] * code.n
    for pos, x in zip(code.info_positions, m):
        w[pos] = int(x)
    return w


def read_message(code: LinearCode, w: Sequence[int]) -> Word:
    return tuple(w[pos] for pos in code.info_positions)


def remove_mask(code: LinearCode, y: Sequence[int]) -> Word:
    """``y - z^ . H`` where ``z^`` is read off the check positions of ``y``."""
    if len(y) != code.n:
        raise ParameterError(f"word length {len(y)} != n = {code.n}")
    H = code.require_matrix()
    z_hat = tuple(y[pos] for pos in code.check_positions)
    return vec_sub(code.ctx, y, vec_mat(code.ctx, z_hat, H))


def smc_encode(code: LinearCode, m: Sequence[int], pattern: PsaPattern) -> Word:
    """Store ``m`` so that every stuck cell holds exactly its stuck value."""
    ctx = code.ctx
    ctx.require_field()
    H = code.require_matrix()
    pattern.check_length(code.n)
    if pattern.u > code.d_claimed - 1:
        raise CapabilityExceededError(f"u = {pattern.u} stuck cells exceed d - 1 = {code.d_claimed - 1}")
    if any(not 0 <= s < code.q for s in pattern.levels):
        raise ParameterError("exact stuck values must lie in [0, q)")
    w = place_message(code, m)
    targets = tuple(ctx.sub(s, w[p]) for p, s in pattern.pairs())
    z = solve_left(H.columns(pattern.positions), targets)
    if z is None:
        raise InternalInvariantError("stuck-column system inconsistent although u <= d - 1")
    y = tuple(ctx.add(a, b) for a, b in zip(w, vec_mat(ctx, z, H)))
    return y


def smc_decode(code: LinearCode, y: Sequence[int]) -> Word:
    return read_message(code, remove_mask(code, y))


class SmcCodec(Codec):
    """Stuck-at masking codec over a linear code of distance ``d``: ``u <= d - 1``."""

    construction = Construction.SMC
    constraint = Constraint.EXACT

    def __init__(self, code: LinearCode):
        code.ctx.require_field()
        code.require_matrix()
        self.code = code
        self.q = code.q
        self.n = code.n

    def message_radices(self):
        return (self.q,) * self.code.k

    @property
    def u_max(self) -> int:
        return min(self.code.d_claimed - 1, self.n)

    def level_choices(self):
        return tuple(range(self.q))

    def admits(self, pattern: PsaPattern) -> bool:
        return pattern.u <= self.u_max and all(0 <= s < self.q for s in pattern.levels)

    def encode(self, message, pattern):
        return smc_encode(self.code, split_message(message, self.message_radices()), pattern)

    def decode(self, word):
        return smc_decode(self.code, word)

    @property
    def descriptor(self) -> CodecDescriptor:
        return CodecDescriptor(
            self.construction,
            self.q,
            self.n,
            self.u_max,
            "exact values in [0, q)",
            Redundancy(self.q, Fraction(self.q ** self.code.redundancy)),
            inner_code=self.code.label(),
        )
