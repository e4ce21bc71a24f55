"""Closed-form redundancy bounds and the channel capacity comparison.

All values are in q-ary symbols. Logarithms are evaluated in double
precision as ratios of natural logs.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .codes import LinearCode, rho_constructive
from .errors import ParameterError


def log_q(x: float, q: int) -> float:
    return math.log(x) / math.log(q)


def _levels(u: int, levels: int | Sequence[int]) -> tuple[int, ...]:
    if isinstance(levels, int):
        return (levels,) * u
    levels = tuple(levels)
    if len(levels) != u:
        raise ParameterError(f"{len(levels)} levels given for u = {u}")
    return levels


def _check(n: int, q: int, u: int, levels: Sequence[int]) -> None:
    if q < 2:
        raise ParameterError("q must be at least 2")
    if not 0 <= u <= n:
        raise ParameterError(f"need 0 <= u <= n, got u={u}, n={n}")
    if any(not 1 <= s <= q - 1 for s in levels):
        raise ParameterError(f"levels must lie in [1, {q - 1}]")


def lower_counting(n: int, u: int, levels: int | Sequence[int], q: int) -> float:
    """``u - log_q prod(q - s_i)``: programmable states of the defective cells."""
    lv = _levels(u, levels)
    _check(n, q, u, lv)
    return u - sum(log_q(q - s, q) for s in lv)


def lower_improved(n: int, u: int, s: int, q: int) -> float:
    """``log_q(u+1) - log_q(1 + u (1 - s/q)^n)`` for equal levels ``s``."""
    _check(n, q, u, (s,) * u)
    return log_q(u + 1, q) - log_q(1 + u * (1 - s / q) ** n, q)


def improved_size_bound(n: int, u: int, s: int, q: int) -> int:
    """Largest message count the improved bound permits: ``floor((q^n + u(q-s)^n)/(u+1))``."""
    return (q**n + u * (q - s) ** n) // (u + 1)


def upper_trivial(n: int, s_max: int, q: int) -> float:
    """Use only levels ``s_max..q-1`` in every cell."""
    if not 0 <= s_max <= q - 1:
        raise ParameterError(f"s_max must lie in [0, {q - 1}]")
    return n * (1 - log_q(q - s_max, q))


def upper_smc(n: int, u: int, q: int, registry: Iterable[LinearCode] = ()) -> int | None:
    """Redundancy of a stuck-at code for ``u`` cells from a constructive family, or None."""
    return rho_constructive(n, u + 1, q, registry)


@dataclass(frozen=True)
class BoundReport:
    n: int
    q: int
    u: int
    levels: tuple[int, ...]
    lower_counting: float
    lower_improved: float | None
    upper_trivial: float
    upper_smc: int | None
    upper: float
    lower: float
    sources: dict

    def to_dict(self) -> dict:
        d = asdict(self)
        d["levels"] = list(self.levels)
        return d


def bound_report(n: int, q: int, u: int, levels: int | Sequence[int] = 1, registry=()) -> BoundReport:
    lv = _levels(u, levels)
    _check(n, q, u, lv)
    lc = lower_counting(n, u, lv, q)
    li = lower_improved(n, u, lv[0], q) if lv and len(set(lv)) == 1 else (0.0 if u == 0 else None)
    ut = upper_trivial(n, max(lv, default=0), q)
    us = upper_smc(n, u, q, registry)
    upper = ut if us is None else min(ut, us)
    lower = max(lc, li if li is not None else lc)
    return BoundReport(
        n,
        q,
        u,
        lv,
        lc,
        li,
        ut,
        us,
        upper,
        lower,
        sources={
            "lower_counting": "counting of programmable states",
            "lower_improved": "decoder preimage counting" if li is not None else "unavailable for unequal levels",
            "upper_trivial": "restrict every cell to levels >= max level",
            "upper_smc": "constructive stuck-at code family" if us is not None else "unavailable",
        },
    )


# -- channel view ------------------------------------------------------------------


def _check_ps(q: int, p: float, s: int) -> None:
    if not 0 <= p <= 1:
        raise ParameterError("p must lie in [0, 1]")
    if not 1 <= s <= q - 1:
        raise ParameterError(f"s must lie in [1, {q - 1}]")


def capacity(q: int, p: float, s: int) -> float:
    """``1 - p log_q(q / (q - s))``."""
    _check_ps(q, p, s)
    return 1 - p * log_q(q / (q - s), q)


def delta(q: int, s: int) -> float:
    """Difference coefficient: the per-unit-``p`` gap between capacity and ``rate_R``."""
    _check_ps(q, 0, s)
    return (2 * s / q) * log_q(q / (q // (s + 1)), q) - log_q(q / (q - s), q)


def rate_R(q: int, p: float, s: int) -> float:
    """Asymptotic rate of the Construction III family with ``Q = s + 1``."""
    _check_ps(q, p, s)
    return 1 - (2 * s * p / q) * log_q(q / (q // (s + 1)), q)


def threshold_p(q: int, s: int) -> float:
    """Defect probability above which using only levels ``s..q-1`` wins."""
    _check_ps(q, 0, s)
    return (q / (2 * s)) * math.log(q / (q - s)) / math.log(s + 1)


def r_max(q: int, p: float, s: int) -> float:
    """Better of the Construction III family rate and the trivial rate ``log_q(q - s)``."""
    _check_ps(q, p, s)
    if q % (s + 1):
        raise ParameterError(f"r_max needs s + 1 = {s + 1} to divide q = {q}")
    if p <= threshold_p(q, s):
        return 1 - (2 * s * p / q) * log_q(s + 1, q)
    return log_q(q - s, q)


DELTA_GRID_Q = (2, 3, 4, 5, 6, 7, 8, 11, 13, 16, 21, 32)
DELTA_GRID_S = (1, 2, 3, 4, 6, 7)

# Published two-significant-figure values, keyed by (q, s).
DELTA_PUBLISHED = {
    (2, 1): 0.0,
    (3, 1): 0.29, (3, 2): 0.33,
    (4, 1): 0.042, (4, 2): 0.5, (4, 3): 0.5,
    (5, 1): 0.089, (5, 2): 0.48, (5, 3): 0.63, (5, 4): 0.6,
    (6, 1): 0.027, (6, 2): 0.18, (6, 3): 0.61, (6, 4): 0.72,
    (7, 1): 0.045, (7, 2): 0.19, (7, 3): 0.57, (7, 4): 0.71, (7, 6): 0.71,
    (8, 1): 0.019, (8, 2): 0.19, (8, 3): 0.27, (8, 4): 0.67, (8, 6): 0.83, (8, 7): 0.75,
    (11, 1): 0.020, (11, 2): 0.11, (11, 3): 0.25, (11, 4): 0.33, (11, 6): 0.76, (11, 7): 0.85,
    (13, 1): 0.015, (13, 2): 0.076, (13, 3): 0.16, (13, 4): 0.31, (13, 6): 0.68, (13, 7): 0.77,
    (16, 1): 0.0079, (16, 2): 0.057, (16, 3): 0.11, (16, 4): 0.19, (16, 6): 0.39, (16, 7): 0.45,
    (21, 1): 0.0072, (21, 2): 0.036, (21, 3): 0.084, (21, 4): 0.14, (21, 6): 0.25, (21, 7): 0.38,
    (32, 1): 0.0033, (32, 2): 0.023, (32, 3): 0.047, (32, 4): 0.082, (32, 6): 0.17, (32, 7): 0.19,
}  # fmt: skip


def table_delta_rows():
    """``(q, s, delta, printed)`` over the published grid, row-major."""
    for q in DELTA_GRID_Q:
        for s in DELTA_GRID_S:
            if (q, s) in DELTA_PUBLISHED:
                yield q, s, delta(q, s), DELTA_PUBLISHED[(q, s)]
