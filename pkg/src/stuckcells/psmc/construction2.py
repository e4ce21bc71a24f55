"""Masking with a parity-check matrix whose stuck-column RRE has small blocks.

Given the stuck columns ``B`` of ``H`` with ``T . B = R`` in reduced row
echelon form, every column of ``R`` belongs to the row of its lowermost
nonzero entry. Choosing ``z'`` one row at a time (the smallest value that
lifts all columns of that row) and returning ``z = z' . T`` masks the pattern
whenever each row's level budget stays below ``q``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..codec import Codec, CodecDescriptor, Construction, Redundancy, split_message
from ..codes import LinearCode
from ..errors import CapabilityExceededError, InternalInvariantError, ParameterError, UnmaskablePatternError
from ..linalg import Matrix, column_block_assignment, maskable_check, rre, vec_add, vec_mat
from ..smc import PsaPattern, place_message, read_message, remove_mask

Word = tuple[int, ...]


def stuck_rre_maskable(H: Matrix, pattern: PsaPattern) -> bool:
    if pattern.u == 0:
        return True
    return maskable_check(rre(H.columns(pattern.positions)).R, pattern.levels)


def rre_mask_solve(H: Matrix, w: Sequence[int], pattern: PsaPattern) -> Word:
    """Return ``z`` with ``(w + z . H)_phi >= s`` at every stuck position."""
    ctx = H.ctx
    ctx.require_field()
    if len(w) != H.ncols:
        raise ParameterError(f"word length {len(w)} != matrix columns {H.ncols}")
    pattern.check_length(H.ncols)
    kappa = H.nrows
    if pattern.u == 0:
        return (0,) * kappa
    res = rre(H.columns(pattern.positions))
    R = res.R
    if not maskable_check(R, pattern.levels):
        raise UnmaskablePatternError("stuck-column RRE violates the per-row level budget")
    blocks = column_block_assignment(R)
    partial = [w[p] for p in pattern.positions]
    z_prime = [0] * kappa
    for i in range(kappa):
        cols = [j for j, b in enumerate(blocks) if b == i]
        if not cols:
            continue
        row = R.rows[i]
        for cand in range(ctx.q):
            if all(ctx.add(partial[j], ctx.mul(cand, row[j])) >= pattern.levels[j] for j in cols):
                break
        else:  # pragma: no cover - excluded by the budget check
            raise InternalInvariantError(f"no value for row {i} although the budget check passed")
        z_prime[i] = cand
        if cand:
            partial = [ctx.add(x, ctx.mul(cand, h)) for x, h in zip(partial, row)]
    return vec_mat(ctx, z_prime, res.T)


@dataclass(frozen=True)
class WitnessReport:
    consistent: bool  # y == w + z . H
    masked: bool
    decoded: Word

    @property
    def ok(self) -> bool:
        return self.consistent and self.masked


def verify_witness(
    H: Matrix,
    message: Sequence[int],
    z: Sequence[int],
    y: Sequence[int],
    pattern: PsaPattern,
    info_positions: Sequence[int],
) -> WitnessReport:
    """Check an externally supplied ``(z, y)`` pair for a message layout.

    ``w`` carries ``message`` on ``info_positions`` and zeros elsewhere. The
    report says whether ``y = w + z . H``, whether ``y`` masks ``pattern``
    (levels as minima), and which message ``y - z . H`` holds.
    """
    ctx = H.ctx
    if len(message) != len(info_positions):
        raise ParameterError("one info position per message symbol required")
    w = [0] * H.ncols
    for pos, x in zip(info_positions, message):
        w[pos] = x
    zH = vec_mat(ctx, z, H)
    expected = vec_add(ctx, w, zH)
    recovered = tuple(ctx.sub(a, b) for a, b in zip(y, zH))
    return WitnessReport(
        consistent=tuple(y) == expected,
        masked=all(y[p] >= s for p, s in pattern.pairs()),
        decoded=tuple(recovered[p] for p in info_positions),
    )


def c2_capability(q: int, d: int, s: int = 1) -> int:
    """Largest ``u`` with ``u <= ceil(q/s) + d - 3``."""
    return -(-q // s) + d - 3


def c2_encode(code: LinearCode, m: Sequence[int], pattern: PsaPattern, s: int | None = None) -> Word:
    """Construction II (``s = 1``) and its generalization to levels ``<= s``."""
    ctx = code.ctx
    ctx.require_field()
    H = code.require_matrix()
    pattern.check_length(code.n)
    s = max(pattern.levels, default=1) if s is None else s
    if any(not 1 <= lvl <= s for lvl in pattern.levels) or s >= code.q:
        raise ParameterError(f"levels must lie in [1, {s}] with s < q")
    cap = c2_capability(code.q, code.d_claimed, s)
    if pattern.u > cap:
        raise CapabilityExceededError(f"u = {pattern.u} exceeds ceil(q/s) + d - 3 = {cap}")
    w = place_message(code, m)
    z = rre_mask_solve(H, w, pattern)
    return vec_add(ctx, w, vec_mat(ctx, z, H))


def c2_decode(code: LinearCode, y: Sequence[int]) -> Word:
    return read_message(code, remove_mask(code, y))


# -- codec wrappers -------------------------------------------------------------------


class _MatrixCodec(Codec):
    code: LinearCode

    def message_radices(self):
        return (self.q,) * self.code.k

    def decode(self, word):
        return c2_decode(self.code, word)

    def _fits(self, pattern):
        return not pattern.positions or pattern.positions[-1] < self.n


class C2Codec(_MatrixCodec):
    """Construction II for ``s = 1``; generalized Construction II for larger ``s``."""

    def __init__(self, code: LinearCode, s: int = 1):
        code.ctx.require_field()
        code.require_matrix()
        if not 1 <= s < code.q:
            raise ParameterError(f"s must lie in [1, {code.q})")
        self.code, self.s = code, s
        self.q, self.n = code.q, code.n
        self.construction = Construction.C2 if s == 1 else Construction.GEN2

    @property
    def u_max(self):
        return max(0, min(c2_capability(self.q, self.code.d_claimed, self.s), self.n))

    def level_choices(self):
        return tuple(range(1, self.s + 1))

    def admits(self, pattern):
        return self._fits(pattern) and pattern.u <= self.u_max and all(1 <= s <= self.s for s in pattern.levels)

    def encode(self, message, pattern):
        return c2_encode(self.code, split_message(message, self.message_radices()), pattern, s=self.s)

    @property
    def descriptor(self):
        return CodecDescriptor(
            self.construction,
            self.q,
            self.n,
            self.u_max,
            f"<= {self.s}",
            Redundancy(self.q, Fraction(self.q**self.code.redundancy)),
            inner_code=self.code.label(),
        )


class RreMaskCodec(_MatrixCodec):
    """Any matrix with identity columns; a pattern is admitted iff its RRE budget check passes."""

    construction = Construction.RRE_MASK

    def __init__(self, code: LinearCode, u: int, s: int = 1):
        code.ctx.require_field()
        code.require_matrix()
        if not 1 <= s < code.q:
            raise ParameterError(f"s must lie in [1, {code.q})")
        self.code, self.u, self.s = code, u, s
        self.q, self.n = code.q, code.n

    @property
    def u_max(self):
        return min(self.u, self.n)

    def level_choices(self):
        return tuple(range(1, self.s + 1))

    def admits(self, pattern):
        return (
            self._fits(pattern)
            and pattern.u <= self.u_max
            and all(1 <= s <= self.s for s in pattern.levels)
            and stuck_rre_maskable(self.code.H, pattern)
        )

    def encode(self, message, pattern):
        msg = split_message(message, self.message_radices())
        if pattern.u > self.u_max:
            raise CapabilityExceededError(f"u = {pattern.u} exceeds design u = {self.u_max}")
        w = place_message(self.code, msg)
        z = rre_mask_solve(self.code.H, w, pattern)
        return vec_add(self.code.ctx, w, vec_mat(self.code.ctx, z, self.code.H))

    @property
    def descriptor(self):
        return CodecDescriptor(
            self.construction,
            self.q,
            self.n,
            self.u_max,
            f"<= {self.s}",
            Redundancy(self.q, Fraction(self.q**self.code.redundancy)),
            inner_code=self.code.label(),
        )


def all_subsets_maskable(H: Matrix, u: int, s: int = 1) -> bool:
    """Whether every ``u``-subset of columns passes the budget check at level ``s``."""
    if math.comb(H.ncols, u) > 10**6:
        raise ParameterError("too many subsets to enumerate")
    return all(
        stuck_rre_maskable(H, PsaPattern.uniform(cols, s)) for cols in itertools.combinations(range(H.ncols), u)
    )
