"""Constructions I, IB and generalized I: one redundancy cell holds a global shift.

All arithmetic here is plain integer arithmetic mod q, so any ``q >= 2``
works. Cell 0 stores the shift ``z``; the message occupies cells ``1..n-1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..codec import Codec, CodecDescriptor, Construction, Redundancy, split_message
from ..errors import CapabilityExceededError, InternalInvariantError, ParameterError
from ..smc import PsaPattern

Word = tuple[int, ...]


def _check_shape(q: int, n: int, m: Sequence[int], pattern: PsaPattern) -> list[int]:
    if q < 2 or n < 1:
        raise ParameterError("need q >= 2 and n >= 1")
    if len(m) != n - 1:
        raise ParameterError(f"message length {len(m)} != n - 1 = {n - 1}")
    if any(not 0 <= x < q for x in m):
        raise ParameterError(f"message symbols must lie in [0, {q})")
    pattern.check_length(n)
    return [0, *(int(x) for x in m)]


def _shift(w: Sequence[int], z: int, q: int) -> Word:
    return tuple((x + z) % q for x in w)


def _unshift(y: Sequence[int], q: int) -> tuple[int, Word]:
    z = y[0]
    return z, tuple((x - z) % q for x in y[1:])


def c1_encode(q: int, n: int, m: Sequence[int], pattern: PsaPattern) -> Word:
    """Mask ``u < q`` partially stuck-at-1 cells with redundancy one."""
    w = _check_shape(q, n, m, pattern)
    if any(s != 1 for s in pattern.levels):
        raise ParameterError("Construction I handles level-1 cells only")
    if pattern.u >= q:
        raise CapabilityExceededError(f"u = {pattern.u} must be < q = {q}")
    taken = {w[p] for p in pattern.positions}
    v = next(x for x in range(q) if x not in taken)
    return _shift(w, (q - v) % q, q)


def c1_decode(q: int, n: int, y: Sequence[int]) -> Word:
    if len(y) != n:
        raise ParameterError(f"word length {len(y)} != n = {n}")
    return _unshift(y, q)[1]


def _decode_extra(q: int, modulus: int, z: int) -> int:
    if z == 0:
        return 0
    v = (q - z) % modulus
    return (q - z - v) // modulus


def c1b_encode(q: int, n: int, m: Sequence[int], m_extra: int, pattern: PsaPattern, u: int | None = None) -> Word:
    """Construction IB: the unused room in the shift cell carries ``m_extra``.

    ``u`` is the design number of defects known to the decoder; it defaults to
    the size of ``pattern``.
    """
    w = _check_shape(q, n, m, pattern)
    u = pattern.u if u is None else u
    if any(s != 1 for s in pattern.levels):
        raise ParameterError("Construction IB handles level-1 cells only")
    if pattern.u > u:
        raise CapabilityExceededError(f"pattern has {pattern.u} cells, design allows {u}")
    if u >= q:
        raise CapabilityExceededError(f"u = {u} must be < q = {q}")
    if not 0 <= m_extra < q // (u + 1):
        raise ParameterError(f"extra message must lie in [0, {q // (u + 1)})")
    residues = {w[p] % (u + 1) for p in pattern.positions}
    v = next(x for x in range(u + 1) if x not in residues)
    return _shift(w, (q - v - m_extra * (u + 1)) % q, q)


def c1b_decode(q: int, n: int, u: int, y: Sequence[int]) -> tuple[Word, int]:
    if len(y) != n:
        raise ParameterError(f"word length {len(y)} != n = {n}")
    z, m = _unshift(y, q)
    return m, _decode_extra(q, u + 1, z)


def gen1_encode(
    q: int, n: int, m: Sequence[int], m_extra: int, pattern: PsaPattern, s_sum: int | None = None
) -> Word:
    """Generalized Construction I for levels with ``sum(s_i) < q``.

    ``s_sum`` is the design level sum known to the decoder (defaults to the
    pattern's own sum). Picks the smallest ``v`` in ``[s_sum + 1]`` whose
    shift lifts every defective cell to at least its level.
    """
    w = _check_shape(q, n, m, pattern)
    total = sum(pattern.levels)
    s_sum = total if s_sum is None else s_sum
    if any(not 1 <= s < q for s in pattern.levels):
        raise ParameterError(f"levels must lie in [1, {q})")
    if total > s_sum:
        raise CapabilityExceededError(f"level sum {total} exceeds design sum {s_sum}")
    if s_sum >= q:
        raise CapabilityExceededError(f"level sum {s_sum} must be < q = {q}")
    modulus = s_sum + 1
    if not 0 <= m_extra < q // modulus:
        raise ParameterError(f"extra message must lie in [0, {q // modulus})")
    base = m_extra * modulus
    for v in range(modulus):
        if all((w[p] - v - base) % q >= s for p, s in pattern.pairs()):
            return _shift(w, (q - v - base) % q, q)
    raise InternalInvariantError("no admissible shift although the level sum is below q")


def gen1_decode(q: int, n: int, s_sum: int, y: Sequence[int]) -> tuple[Word, int]:
    return c1b_decode(q, n, s_sum, y)


# -- codec wrappers ----------------------------------------------------------------


class _ShiftCodec(Codec):
    def _fits(self, pattern: PsaPattern) -> bool:
        return not pattern.positions or pattern.positions[-1] < self.n


class C1Codec(_ShiftCodec):
    construction = Construction.C1

    def __init__(self, q: int, n: int, u: int | None = None):
        if n < 1:
            raise ParameterError("n must be positive")
        self.q, self.n = q, n
        self._u = min(q - 1, n) if u is None else u
        if not 0 <= self._u < q:
            raise ParameterError(f"design u must lie in [0, {q})")

    @property
    def u_max(self):
        return self._u

    def message_radices(self):
        return (self.q,) * (self.n - 1)

    def level_choices(self):
        return (1,)

    def admits(self, pattern):
        return self._fits(pattern) and pattern.u <= self._u and all(s == 1 for s in pattern.levels)

    def encode(self, message, pattern):
        return c1_encode(self.q, self.n, split_message(message, self.message_radices()), pattern)

    def decode(self, word):
        return c1_decode(self.q, self.n, word)

    @property
    def descriptor(self):
        return CodecDescriptor(self.construction, self.q, self.n, self._u, "all 1", Redundancy(self.q, Fraction(self.q)))


class C1BCodec(_ShiftCodec):
    construction = Construction.C1B

    def __init__(self, q: int, n: int, u: int):
        if not 0 <= u < q:
            raise ParameterError(f"u must lie in [0, {q})")
        if n < 1:
            raise ParameterError("n must be positive")
        self.q, self.n, self.u = q, n, u

    @property
    def u_max(self):
        return min(self.u, self.n)

    def message_radices(self):
        return (self.q,) * (self.n - 1) + (self.q // (self.u + 1),)

    def level_choices(self):
        return (1,)

    def admits(self, pattern):
        return self._fits(pattern) and pattern.u <= self.u and all(s == 1 for s in pattern.levels)

    def encode(self, message, pattern):
        msg = split_message(message, self.message_radices())
        return c1b_encode(self.q, self.n, msg[:-1], msg[-1], pattern, u=self.u)

    def decode(self, word):
        m, extra = c1b_decode(self.q, self.n, self.u, word)
        return (*m, extra)

    @property
    def descriptor(self):
        power = Fraction(self.q, self.q // (self.u + 1))  # r = 1 - log_q floor(q/(u+1))
        return CodecDescriptor(self.construction, self.q, self.n, self.u_max, "all 1", Redundancy(self.q, power))


class Gen1Codec(_ShiftCodec):
    construction = Construction.GEN1

    def __init__(self, q: int, n: int, s_sum: int):
        if not 0 <= s_sum < q:
            raise ParameterError(f"level sum must lie in [0, {q})")
        if n < 1:
            raise ParameterError("n must be positive")
        self.q, self.n, self.s_sum = q, n, s_sum

    @property
    def u_max(self):
        return min(self.s_sum, self.n)

    def message_radices(self):
        return (self.q,) * (self.n - 1) + (self.q // (self.s_sum + 1),)

    def level_choices(self):
        return tuple(range(1, self.s_sum + 1))

    def admits(self, pattern):
        return (
            self._fits(pattern)
            and all(1 <= s < self.q for s in pattern.levels)
            and sum(pattern.levels) <= self.s_sum
        )

    def encode(self, message, pattern):
        msg = split_message(message, self.message_radices())
        return gen1_encode(self.q, self.n, msg[:-1], msg[-1], pattern, s_sum=self.s_sum)

    def decode(self, word):
        m, extra = gen1_decode(self.q, self.n, self.s_sum, word)
        return (*m, extra)

    @property
    def descriptor(self):
        power = Fraction(self.q, self.q // (self.s_sum + 1))
        return CodecDescriptor(
            self.construction, self.q, self.n, self.u_max, f"sum <= {self.s_sum}", Redundancy(self.q, power)
        )
