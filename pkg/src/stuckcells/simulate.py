"""Monte Carlo run of a codec on the memoryless partially stuck-at channel.

Each cell is defective independently with probability ``p``. Every trial
draws from its own stream ``SeedSequence(seed, spawn_key=(trial,))``, so a
trial's outcome does not depend on which other trials run or in what order.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .codec import Codec, Constraint
from .errors import ParameterError
from .smc import PsaPattern

SCHEMA = 1


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


def binomial_tail(n: int, p: float, k: int) -> float:
    """``P[X >= k]`` for ``X ~ Binomial(n, p)``."""
    if k <= 0:
        return 1.0
    return float(sum(math.comb(n, i) * Fraction(p) ** i * (1 - Fraction(p)) ** (n - i) for i in range(k, n + 1)))


def run_trial(codec: Codec, p: float, level: int, seed: int, trial: int) -> dict:
    rng = trial_rng(seed, trial)
    stuck = np.flatnonzero(rng.random(codec.n) < p)
    if codec.constraint is Constraint.EXACT:
        levels = rng.integers(0, codec.q, size=stuck.size)
    else:
        levels = np.full(stuck.size, level)
    pattern = PsaPattern(tuple(stuck.tolist()), tuple(levels.tolist()))
    out = {"u": pattern.u, "admitted": codec.admits(pattern), "masked": None, "round_trip": None}
    if not out["admitted"]:
        return out
    radices = codec.message_radices()
    message = tuple(rng.integers(0, np.array(radices, dtype=np.int64)).tolist()) if radices else ()
    y = codec.encode(message, pattern)
    out["masked"] = codec.masks(y, pattern)
    out["round_trip"] = tuple(codec.decode(y)) == message
    return out


def simulate(codec: Codec, p: float, trials: int, seed: int, level: int = 1) -> dict:
    """Aggregate ``trials`` independent trials into a JSON-ready summary."""
    if not 0 <= p <= 1:
        raise ParameterError("p must lie in [0, 1]")
    if trials < 1:
        raise ParameterError("trials must be positive")
    hist: dict[int, int] = {}
    over = violations = roundtrip_errors = 0
    for t in range(trials):
        r = run_trial(codec, p, level, seed, t)
        hist[r["u"]] = hist.get(r["u"], 0) + 1
        if not r["admitted"]:
            over += 1
            continue
        violations += not r["masked"]
        roundtrip_errors += not r["round_trip"]
    successes = trials - over - violations - roundtrip_errors
    red = codec.redundancy()
    return {
        "schema": SCHEMA,
        "construction": codec.construction.value,
        "descriptor": codec.descriptor.to_dict(),
        "q": codec.q,
        "n": codec.n,
        "p": p,
        "level": level,
        "trials": trials,
        "seed": seed,
        "u_histogram": {str(u): hist[u] for u in sorted(hist)},
        "capability_failures": over,
        "failure_rate": over / trials,
        "masking_violations": violations,
        "round_trip_errors": roundtrip_errors,
        "mask_success_rate": successes / trials,
        "achieved_rate": (codec.n - red.value) / codec.n,
    }
