"""Arithmetic over the cell alphabet ``[q] = {0, ..., q-1}``.

When ``q = p**m`` is a prime power the alphabet is identified with GF(q):
an integer ``v`` stands for the polynomial whose coefficients are the
base-``p`` digits of ``v`` (least significant digit = constant term), and
products are reduced modulo a fixed irreducible polynomial. For any other
``q`` only plain integer arithmetic mod ``q`` is available.

Irreducible polynomials use the same integer encoding, e.g. over GF(2)
``x^2 + x + 1`` is ``0b111 == 7``.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field

from .errors import ContextKindError, InvalidAlphabetError

MAX_Q = 1 << 16


class Kind(enum.Enum):
    FIELD = "field"
    MOD_RING = "mod_ring"


def _factor_prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` or None."""
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return (q, 1)
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


def is_prime_power(q: int) -> bool:
    return q >= 2 and _factor_prime_power(q) is not None


# -- polynomials over GF(p) as coefficient lists (constant term first) ------


def _int_to_poly(v: int, p: int) -> list[int]:
    coeffs = []
    while v:
        v, d = divmod(v, p)
        coeffs.append(d)
    return coeffs


def _poly_to_int(coeffs: list[int], p: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _poly_trim(a)
    return a


def _is_irreducible(f: int, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    fc = _int_to_poly(f, p)
    deg = len(fc) - 1
    for d in range(1, deg // 2 + 1):
        for g in range(p**d, 2 * p**d):
            if not _poly_mod(fc, _int_to_poly(g, p), p):
                return False
    return True


@functools.cache
def canonical_reduction_poly(p: int, m: int) -> int:
    """Smallest monic irreducible polynomial of degree ``m`` over GF(p)."""
    for f in range(p**m, 2 * p**m):
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- the context --------------------------------------------------------------


@dataclass(frozen=True)
class AlphabetCtx:
    q: int
    kind: Kind
    p: int | None = None
    m: int | None = None
    reduction_poly: int | None = None
    _tables: "_FieldTables | None" = field(default=None, repr=False, compare=False)

    @property
    def is_field(self) -> bool:
        return self.kind is Kind.FIELD

    def require_field(self) -> None:
        if not self.is_field:
            raise ContextKindError(f"q={self.q} is not a prime power; no field structure")

    # element-level ops; bound versions of the module functions below
    def add(self, a: int, b: int) -> int:
        if self._tables is None:
            return (a + b) % self.q
        return self._tables.add(a, b)

    def sub(self, a: int, b: int) -> int:
        if self._tables is None:
            return (a - b) % self.q
        return self._tables.add(a, self._tables.neg[b])

    def neg(self, a: int) -> int:
        if self._tables is None:
            return -a % self.q
        return self._tables.neg[a]

    def mul(self, a: int, b: int) -> int:
        if self._tables is None:
            return a * b % self.q
        if a == 0 or b == 0:
            return 0
        t = self._tables
        return t.exp[t.log[a] + t.log[b]]

    def inv(self, a: int) -> int:
        self.require_field()
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        t = self._tables
        return t.exp[(self.q - 1 - t.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def to_poly(self, v: int) -> list[int]:
        """Coefficient list (constant term first) of the element encoded by ``v``."""
        self.require_field()
        return _int_to_poly(v, self.p)

    def from_poly(self, coeffs: list[int]) -> int:
        self.require_field()
        return _poly_to_int([c % self.p for c in coeffs], self.p)


class _FieldTables:
    """Addition table plus exp/log tables for GF(p^m)."""

    def __init__(self, p: int, m: int, poly: int):
        q = p**m
        self.neg = [_poly_to_int([(-c) % p for c in _int_to_poly(v, p)], p) for v in range(q)]
        if p == 2:
            self.add = int.__xor__
        else:
            digits = [_int_to_poly(v, p) + [0] * m for v in range(q)]

            def add(a, b):
                da, db = digits[a], digits[b]
                return _poly_to_int([(da[i] + db[i]) % p for i in range(m)], p)

            if q <= 256:
                table = [[add(a, b) for b in range(q)] for a in range(q)]
                self.add = lambda a, b: table[a][b]
            else:
                self.add = add
        fc = _int_to_poly(poly, p)
        mulx = functools.partial(_poly_mul_mod, p=p, f=fc)
        gen = self._find_generator(q, p, mulx)
        exp = [0] * (2 * q)
        log = [0] * q
        cur = [1]
        for i in range(q - 1):
            v = _poly_to_int(cur, p)
            exp[i] = v
            log[v] = i
            cur = mulx(cur, gen)
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        self.exp = exp
        self.log = log

    @staticmethod
    def _find_generator(q, p, mulx):
        order_target = q - 1
        for g in range(2 if q > 2 else 1, q):
            gp = _int_to_poly(g, p)
            cur = list(gp)
            k = 1
            while _poly_trim(list(cur)) != [1]:
                cur = mulx(cur, gp)
                k += 1
                if k > order_target:
                    break
            if k == order_target:
                return gp
        raise AssertionError("field has no generator")  # pragma: no cover


def _poly_mul_mod(a: list[int], b: list[int], p: int, f: list[int]) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, f, p)


@functools.cache
def make_ctx(q: int) -> AlphabetCtx:
    """Arithmetic context for ``[q]``: GF(q) if q is a prime power, else Z/qZ."""
    if not isinstance(q, int) or q < 2:
        raise InvalidAlphabetError(f"alphabet size must be an integer >= 2, got {q!r}")
    if q > MAX_Q:
        raise InvalidAlphabetError(f"alphabet size {q} exceeds supported maximum {MAX_Q}")
    pm = _factor_prime_power(q)
    if pm is None:
        return AlphabetCtx(q=q, kind=Kind.MOD_RING)
    p, m = pm
    poly = canonical_reduction_poly(p, m)
    return AlphabetCtx(q=q, kind=Kind.FIELD, p=p, m=m, reduction_poly=poly, _tables=_FieldTables(p, m, poly))


@functools.cache
def make_ring(q: int) -> AlphabetCtx:
    """Plain integer arithmetic mod ``q``, even when q is a prime power."""
    if not isinstance(q, int) or q < 2:
        raise InvalidAlphabetError(f"alphabet size must be an integer >= 2, got {q!r}")
    return AlphabetCtx(q=q, kind=Kind.MOD_RING)


def add(ctx: AlphabetCtx, a: int, b: int) -> int:
    return ctx.add(a, b)


def sub(ctx: AlphabetCtx, a: int, b: int) -> int:
    return ctx.sub(a, b)


def neg(ctx: AlphabetCtx, a: int) -> int:
    return ctx.neg(a)


def mul(ctx: AlphabetCtx, a: int, b: int) -> int:
    return ctx.mul(a, b)


def inv(ctx: AlphabetCtx, a: int) -> int:
    return ctx.inv(a)
