"""Construction III and its generalizations: a small-alphabet stuck-at code
masks the few cells a global shift cannot protect.

Layout over ``n + 1`` cells for an inner ``[n, k, d]_Q`` code in left
systematic form: cells ``0..n-k-2`` carry ``Q * m'_i`` (extra message
symbols in ``[q // Q]``), cell ``n-k-1`` is a pure check cell, cells
``n-k..n-1`` carry the main message and cell ``n`` records the shift ``z``.

A cell at level ``s`` is *safe* when its value lies in ``[s, q-Q]``: adding
any inner-code symbol in ``[Q]`` keeps it at least ``s`` without wrapping.
The shift ``z`` is the smallest one leaving at most ``u~`` unsafe defective
cells; those become exact stuck-at cells for the inner code.

The unsafe count is taken on ``w + m~``, the word including the extra
message, so every cell outside ``U~`` really is safe once ``c'`` is added.
With ``Q = 2`` and level 1 this is Construction III; the last cell stores
``z`` when ``z >= S`` and ``q - Q + z`` otherwise, ``S`` being the largest
level (for ``Q = 2, S = 1`` the familiar "``z``, else ``q - 2``").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..codec import Codec, CodecDescriptor, Construction, Redundancy, split_message
from ..codes import LinearCode
from ..errors import CapabilityExceededError, InternalInvariantError, ParameterError
from ..linalg import solve_left, vec_mat
from ..smc import PsaPattern

Word = tuple[int, ...]


@dataclass(frozen=True)
class EncodeTrace:
    z: int
    u_tilde: int
    w: Word
    w_z: Word
    unsafe_positions: tuple[int, ...]
    v: Word
    targets: Word
    z_b: Word
    c_prime: Word
    m_tilde: Word
    y: Word


@dataclass(frozen=True)
class DecodeTrace:
    z_hat: int
    y_hat: Word
    m_extra: Word
    t_hat: Word
    c_prime: Word
    m: Word


def sigma(q: int, Q: int, level: int) -> int:
    """Number of shifted values that are unsafe for a cell at ``level``."""
    return min(q, Q + level - 1)


def u_tilde_same(q: int, Q: int, s: int, u: int) -> int:
    return (Q + s - 1) * u // q


def u_tilde_levels(q: int, Q: int, levels: Sequence[int]) -> int:
    return sum(sigma(q, Q, s) for s in levels) // q


def _unsafe(x: int, level: int, q: int, Q: int) -> bool:
    return not level <= x <= q - Q


def _validate(q: int, code: LinearCode, m, m_extra, pattern: PsaPattern, top: int):
    Q = code.q
    if not code.ctx.is_field:
        raise ParameterError("inner code must be over a field")
    if not code.is_left_systematic:
        raise ParameterError("inner code needs its identity in the leftmost n-k columns")
    if 2 * Q > q:
        raise ParameterError(f"need 2Q <= q (Q={Q}, q={q})")
    if Q < top + 1 or Q + top - 1 >= q:
        raise ParameterError(f"need Q >= {top + 1} and Q + s - 1 < q for level {top}")
    n, k = code.n, code.k
    if len(m) != k or any(not 0 <= x < q for x in m):
        raise ParameterError(f"main message must be {k} symbols in [0, {q})")
    if len(m_extra) != n - k - 1 or any(not 0 <= x < q // Q for x in m_extra):
        raise ParameterError(f"extra message must be {n - k - 1} symbols in [0, {q // Q})")
    pattern.check_length(n + 1)
    if any(not 1 <= s <= top for s in pattern.levels):
        raise ParameterError(f"levels must lie in [1, {top}]")


def _encode_core(
    q: int, code: LinearCode, m, m_extra, pattern: PsaPattern, eff_levels: Sequence[int], top: int, bound: int
) -> EncodeTrace:
    Q, n, k = code.q, code.n, code.k
    _validate(q, code, m, m_extra, pattern, top)
    if bound > code.d_claimed - 1:
        raise CapabilityExceededError(f"u~ = {bound} exceeds inner code capability d - 1 = {code.d_claimed - 1}")
    H = code.require_matrix()
    w = (0,) * (n - k) + tuple(int(x) for x in m) + (0,)
    m_tilde = tuple(Q * x for x in m_extra) + (0,) * (k + 2)
    base = [a + b for a, b in zip(w, m_tilde)]
    stuck = list(zip(pattern.positions, eff_levels))

    def unsafe_count(z):
        return sum(_unsafe((base[p] + z) % q, lvl, q, Q) for p, lvl in stuck)

    z = next((z for z in range(q) if unsafe_count(z) <= bound), None)
    if z is None:
        raise InternalInvariantError("no shift meets the pigeonhole bound")
    w_z = [(x + z) % q for x in w]
    w_z[n] = z if z >= top else q - Q + z
    unsafe = [(p, lvl) for p, lvl in stuck if p < n and _unsafe((base[p] + z) % q, lvl, q, Q)]
    positions = tuple(p for p, _ in unsafe)
    targets = []
    for p, lvl in unsafe:
        x = (base[p] + z) % q
        targets.append(lvl - x if x < lvl else 0)
    if positions:
        z_b = solve_left(H.columns(positions), targets)
        if z_b is None:
            raise InternalInvariantError("inner stuck-at system inconsistent")
    else:
        z_b = (0,) * (n - k)
    c_prime = vec_mat(code.ctx, z_b, H)
    y = tuple((w_z[i] + m_tilde[i] + c_prime[i]) % q for i in range(n)) + (w_z[n],)
    v = tuple(int(x == q - 1) for x in w_z[:n])
    return EncodeTrace(z, bound, w, tuple(w_z), positions, v, tuple(targets), tuple(z_b), c_prime, m_tilde, y)


def _decode_core(q: int, code: LinearCode, y: Sequence[int]) -> DecodeTrace:
    Q, n, k = code.q, code.n, code.k
    if len(y) != n + 1:
        raise ParameterError(f"word length {len(y)} != n + 1 = {n + 1}")
    H = code.require_matrix()
    if (y[n - k - 1] - y[n]) % q <= Q - 1:
        z_hat = y[n]
    else:
        z_hat = (y[n] - (q - Q)) % q
    y_hat = tuple((x - z_hat) % q for x in y[:n])
    extra = tuple(y_hat[i] // Q for i in range(n - k - 1))
    t_hat = tuple((y_hat[i] - Q * extra[i]) % Q for i in range(n - k - 1)) + (y_hat[n - k - 1] % Q,)
    c_prime = vec_mat(code.ctx, t_hat, H)
    m = tuple((y_hat[n - k + i] - c_prime[n - k + i]) % q for i in range(k))
    return DecodeTrace(z_hat, y_hat, extra, t_hat, c_prime, m)


# -- Construction III (binary inner code, level 1) -------------------------------------


def _require_binary(code: LinearCode):
    if code.q != 2:
        raise ParameterError("Construction III needs a binary inner code")


def c3_encode_trace(q: int, bincode: LinearCode, m, m_extra, pattern: PsaPattern) -> EncodeTrace:
    _require_binary(bincode)
    if any(s != 1 for s in pattern.levels):
        raise ParameterError("Construction III handles level-1 cells only")
    return _encode_core(q, bincode, m, m_extra, pattern, pattern.levels, 1, 2 * pattern.u // q)


def c3_encode(q: int, bincode: LinearCode, m, m_extra, pattern: PsaPattern) -> Word:
    return c3_encode_trace(q, bincode, m, m_extra, pattern).y


def c3_decode_trace(q: int, bincode: LinearCode, y: Sequence[int]) -> DecodeTrace:
    _require_binary(bincode)
    return _decode_core(q, bincode, y)


def c3_decode(q: int, bincode: LinearCode, y: Sequence[int]) -> tuple[Word, Word]:
    t = c3_decode_trace(q, bincode, y)
    return t.m, t.m_extra


# -- generalizations --------------------------------------------------------------------


def gen3s_encode_trace(q: int, code: LinearCode, s: int, m, m_extra, pattern: PsaPattern) -> EncodeTrace:
    """Same-level variant: every defective cell is treated as level ``s``."""
    if any(not 1 <= lvl <= s for lvl in pattern.levels):
        raise ParameterError(f"levels must lie in [1, {s}]")
    eff = (s,) * pattern.u
    return _encode_core(q, code, m, m_extra, pattern, eff, s, u_tilde_same(q, code.q, s, pattern.u))


def gen3s_encode(q: int, code: LinearCode, s: int, m, m_extra, pattern: PsaPattern) -> Word:
    return gen3s_encode_trace(q, code, s, m, m_extra, pattern).y


def gen3s_decode(q: int, code: LinearCode, y: Sequence[int]) -> tuple[Word, Word]:
    t = _decode_core(q, code, y)
    return t.m, t.m_extra


def gen3_encode_trace(q: int, code: LinearCode, m, m_extra, pattern: PsaPattern) -> EncodeTrace:
    """Per-level variant: each cell is judged against its own level."""
    top = max(pattern.levels, default=1)
    return _encode_core(q, code, m, m_extra, pattern, pattern.levels, top, u_tilde_levels(q, code.q, pattern.levels))


def gen3_encode(q: int, code: LinearCode, m, m_extra, pattern: PsaPattern) -> Word:
    return gen3_encode_trace(q, code, m, m_extra, pattern).y


def gen3_decode(q: int, code: LinearCode, y: Sequence[int]) -> tuple[Word, Word]:
    t = _decode_core(q, code, y)
    return t.m, t.m_extra


def gen3_redundancy(q: int, Q: int, n: int, k: int) -> Redundancy:
    """``(n-k-1) log_q(q / floor(q/Q)) + 2`` for an inner ``[n, k]_Q`` code."""
    return Redundancy(q, Fraction(q, q // Q) ** (n - k - 1) * q * q)


# -- codec wrappers ---------------------------------------------------------------------


class Gen3Codec(Codec):
    """Construction III family over ``n + 1`` cells.

    ``mode`` selects how ``u~`` is counted: ``"c3"`` (binary code, level 1),
    ``"same"`` (all cells treated as level ``s``) or ``"levels"`` (per-cell
    weights ``sigma``).
    """

    def __init__(self, q: int, code: LinearCode, s: int = 1, mode: str = "levels"):
        if mode not in ("c3", "same", "levels"):
            raise ParameterError(f"unknown mode {mode!r}")
        if mode == "c3":
            _require_binary(code)
            s = 1
        Q = code.q
        if 2 * Q > q or Q < s + 1 or Q + s - 1 >= q:
            raise ParameterError(f"parameters violate 2Q <= q, Q >= s+1, Q+s-1 < q (q={q}, Q={Q}, s={s})")
        if not code.is_cited and not code.is_left_systematic:
            raise ParameterError("inner code needs its identity in the leftmost n-k columns")
        self.q, self.code, self.s, self.mode = q, code, s, mode
        self.n = code.n + 1
        self.construction = {
            "c3": Construction.C3,
            "same": Construction.GEN3_SAME_S,
            "levels": Construction.GEN3_DIFF_S,
        }[mode]

    def u_tilde(self, pattern: PsaPattern) -> int:
        if self.mode == "same":
            return u_tilde_same(self.q, self.code.q, self.s, pattern.u)
        return u_tilde_levels(self.q, self.code.q, pattern.levels)

    @property
    def u_max(self) -> int:
        d, q = self.code.d_claimed, self.q
        return min(self.n, (d * q - 1) // sigma(q, self.code.q, self.s))

    def message_radices(self):
        c = self.code
        return (self.q,) * c.k + (self.q // c.q,) * (c.n - c.k - 1)

    def level_choices(self):
        return tuple(range(1, self.s + 1))

    def admits(self, pattern):
        return (
            (not pattern.positions or pattern.positions[-1] < self.n)
            and all(1 <= s <= self.s for s in pattern.levels)
            and self.u_tilde(pattern) <= self.code.d_claimed - 1
        )

    def _split(self, message):
        msg = split_message(message, self.message_radices())
        return msg[: self.code.k], msg[self.code.k :]

    def encode(self, message, pattern):
        m, extra = self._split(message)
        if self.mode == "c3":
            return c3_encode(self.q, self.code, m, extra, pattern)
        if self.mode == "same":
            return gen3s_encode(self.q, self.code, self.s, m, extra, pattern)
        return gen3_encode(self.q, self.code, m, extra, pattern)

    def decode(self, word):
        t = _decode_core(self.q, self.code, word)
        return t.m + t.m_extra

    @property
    def descriptor(self):
        c = self.code
        return CodecDescriptor(
            self.construction,
            self.q,
            self.n,
            self.u_max,
            f"<= {self.s}",
            gen3_redundancy(self.q, c.q, c.n, c.k),
            inner_code=c.label(),
            params={"Q": c.q, "mode": self.mode},
        )
