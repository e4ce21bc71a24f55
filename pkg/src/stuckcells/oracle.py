"""Exhaustive ground truth for small instances.

``verify_exhaustive`` runs every message against every admissible defect
pattern; ``max_M_exhaustive`` finds the largest possible message count by
searching partitions of ``[q]^n`` directly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .codec import Codec
from .errors import ParameterError, StuckCellsError, TooLargeError
from .smc import PsaPattern

CASE_LIMIT = 10**7


@dataclass
class VerifyReport:
    construction: str
    cases: int = 0
    failures: int = 0
    first_counterexample: dict | None = None
    sizes: tuple[int, ...] = ()
    patterns: int = 0
    messages: int = 0
    failure_kinds: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "construction": self.construction,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
            "patterns": self.patterns,
            "messages": self.messages,
            "sizes": list(self.sizes),
            "failure_kinds": self.failure_kinds,
            "first_counterexample": self.first_counterexample,
        }


def iter_patterns(codec: Codec, sizes: Iterable[int], levels: Sequence[int] | None = None) -> Iterator[PsaPattern]:
    """All admissible patterns of the given sizes, positions then levels in lexicographic order."""
    choices = tuple(codec.level_choices() if levels is None else levels)
    for u in sizes:
        for positions in itertools.combinations(range(codec.n), u):
            for lv in itertools.product(choices, repeat=u):
                pattern = PsaPattern(positions, lv)
                if codec.admits(pattern):
                    yield pattern


def _sizes(codec: Codec, u) -> tuple[int, ...]:
    if u is None:
        return tuple(range(codec.u_max + 1))
    if isinstance(u, int):
        return (u,)
    return tuple(u)


def verify_exhaustive(
    codec: Codec,
    u: int | Iterable[int] | None = None,
    levels: Sequence[int] | None = None,
    limit: int = CASE_LIMIT,
) -> VerifyReport:
    """Check masking and round-trip for every message and every admissible pattern.

    ``u`` is a single defect count, an iterable of counts, or None for
    ``0..codec.u_max``. ``levels`` overrides the per-cell level alphabet.
    """
    sizes = _sizes(codec, u)
    if any(s < 0 for s in sizes):
        raise ParameterError("defect counts must be non-negative")
    n_levels = len(tuple(codec.level_choices() if levels is None else levels))
    n_messages = codec.message_space_size()
    estimate = n_messages * sum(math.comb(codec.n, s) * n_levels**s for s in sizes)
    if estimate > limit:
        raise TooLargeError(f"{estimate} cases exceed the limit of {limit}")
    report = VerifyReport(codec.construction.value, sizes=sizes, messages=n_messages)
    radices = codec.message_radices()
    for pattern in iter_patterns(codec, sizes, levels):
        report.patterns += 1
        for message in itertools.product(*(range(r) for r in radices)):
            report.cases += 1
            kind, detail = _check_case(codec, message, pattern)
            if kind is None:
                continue
            report.failures += 1
            report.failure_kinds[kind] = report.failure_kinds.get(kind, 0) + 1
            if report.first_counterexample is None:
                report.first_counterexample = {
                    "kind": kind,
                    "message": list(message),
                    "positions": list(pattern.positions),
                    "levels": list(pattern.levels),
                    **detail,
                }
    return report


def _check_case(codec: Codec, message, pattern):
    try:
        y = codec.encode(message, pattern)
    except StuckCellsError as exc:
        return "encode-error", {"error": f"{type(exc).__name__}: {exc}"}
    if len(y) != codec.n or any(not 0 <= x < codec.q for x in y):
        return "bad-word", {"word": list(y)}
    if not codec.masks(y, pattern):
        return "not-masked", {"word": list(y)}
    decoded = tuple(codec.decode(y))
    if decoded != tuple(message):
        return "round-trip", {"word": list(y), "decoded": list(decoded)}
    return None, {}


# -- exact maximum message count -------------------------------------------------------


def max_M_exhaustive(n: int, q: int, u: int, s: int) -> int:
    """Largest ``M`` such that ``M`` disjoint word sets each mask every ``u``-subset at level ``s``.

    A set masks a subset ``U`` when one of its words is ``>= s`` on all of
    ``U``. The all-``(q-1)`` word masks everything alone, so it forms its own
    class; the rest is an exact set-packing search over the remaining words.
    """
    if q**n > 16:
        raise TooLargeError(f"q^n = {q**n} exceeds the exhaustive limit 16")
    if not 0 <= u <= n:
        raise ParameterError("need 0 <= u <= n")
    if not 1 <= s <= q - 1:
        raise ParameterError(f"s must lie in [1, {q - 1}]")
    if u == 0:
        return q**n
    subsets = list(itertools.combinations(range(n), u))
    full = (1 << len(subsets)) - 1
    top = (q - 1,) * n
    words = [w for w in itertools.product(range(q), repeat=n) if w != top]
    cover = []
    for w in words:
        mask = 0
        for b, U in enumerate(subsets):
            if all(w[i] >= s for i in U):
                mask |= 1 << b
        cover.append(mask)
    # Drop words that mask nothing, then build minimal covering classes.
    useful = [i for i, c in enumerate(cover) if c]
    cover = [cover[i] for i in useful]
    W = len(cover)
    union = [0] * (1 << W)
    for S in range(1, 1 << W):
        low = S & -S
        union[S] = union[S ^ low] | cover[low.bit_length() - 1]
    minimal = []
    for S in range(1, 1 << W):
        if union[S] != full:
            continue
        rest = S
        is_min = True
        while rest:
            low = rest & -rest
            if union[S ^ low] == full:
                is_min = False
                break
            rest ^= low
        if is_min:
            minimal.append(S)
    by_low: dict[int, list[int]] = {}
    for S in minimal:
        by_low.setdefault(S & -S, []).append(S)

    memo: dict[int, int] = {}

    def best(avail: int) -> int:
        if avail in memo:
            return memo[avail]
        if union[avail] != full:
            memo[avail] = 0
            return 0
        low = avail & -avail
        result = best(avail ^ low)
        for S in by_low.get(low, ()):
            if S & avail == S:
                result = max(result, 1 + best(avail & ~S))
        memo[avail] = result
        return result

    return 1 + best((1 << W) - 1)
