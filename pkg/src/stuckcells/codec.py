"""Common codec interface, descriptors and exact redundancy values.

Every construction is wrapped in a :class:`Codec` whose messages are flat
tuples of integers with per-symbol radices, so the oracle, the simulator and
the CLI can drive all of them the same way.
"""

from __future__ import annotations

import abc
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Sequence

from .errors import ParameterError

if TYPE_CHECKING:  # pragma: no cover
    from .smc import PsaPattern

Word = tuple[int, ...]


class Construction(enum.Enum):
    SMC = "smc"
    C1 = "c1"
    C1B = "c1b"
    GEN1 = "gen1"
    RRE_MASK = "rre_mask"
    C2 = "c2"
    GEN2 = "gen2"
    C3 = "c3"
    GEN3_SAME_S = "gen3s"
    GEN3_DIFF_S = "gen3"
    UMC = "umc"


class Constraint(enum.Enum):
    """How a stuck level restricts the stored value."""

    EXACT = "exact"  # y == s
    MIN = "min"  # y >= s
    MAX = "max"  # y <= s

    def holds(self, value: int, level: int) -> bool:
        if self is Constraint.EXACT:
            return value == level
        if self is Constraint.MIN:
            return value >= level
        return value <= level


@dataclass(frozen=True)
class Redundancy:
    """``r = log_q(power)``, kept exact as a rational ``power = q^N / M``."""

    q: int
    power: Fraction

    @classmethod
    def from_size(cls, q: int, cells: int, size: int) -> "Redundancy":
        if size < 1:
            raise ParameterError("message space must be non-empty")
        return cls(q, Fraction(q**cells, size))

    @property
    def value(self) -> float:
        p = self.power
        return (math.log(p.numerator) - math.log(p.denominator)) / math.log(self.q)

    def integer_value(self) -> int | None:
        """The redundancy as an int when ``power`` is an exact power of q."""
        p = self.power
        if p.denominator != 1:
            return None
        r, x = 0, p.numerator
        while x % self.q == 0 and x > 1:
            x //= self.q
            r += 1
        return r if x == 1 else None

    def exact_str(self) -> str:
        r = self.integer_value()
        return str(r) if r is not None else f"log_{self.q}({self.power})"

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class CodecDescriptor:
    construction: Construction
    q: int
    n: int
    u_max: int
    levels: str
    redundancy: Redundancy
    inner_code: str | None = None
    params: dict[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "construction": self.construction.value,
            "q": self.q,
            "n": self.n,
            "u_max": self.u_max,
            "levels": self.levels,
            "inner_code": self.inner_code,
            "redundancy": self.redundancy.value,
            "redundancy_exact": self.redundancy.exact_str(),
            "params": self.params,
        }


def split_message(message: Sequence[int], radices: Sequence[int]) -> tuple[int, ...]:
    if len(message) != len(radices):
        raise ParameterError(f"message has {len(message)} symbols, codec expects {len(radices)}")
    for i, (x, rad) in enumerate(zip(message, radices)):
        if not 0 <= x < rad:
            raise ParameterError(f"message symbol {i} = {x} outside [0, {rad})")
    return tuple(int(x) for x in message)


class Codec(abc.ABC):
    """Uniform interface over every masking construction."""

    construction: Construction
    constraint: Constraint = Constraint.MIN
    q: int
    n: int

    @abc.abstractmethod
    def message_radices(self) -> tuple[int, ...]:
        """Alphabet size of each flat message symbol."""

    @abc.abstractmethod
    def encode(self, message: Sequence[int], pattern: "PsaPattern") -> Word: ...

    @abc.abstractmethod
    def decode(self, word: Sequence[int]) -> Word: ...

    @abc.abstractmethod
    def admits(self, pattern: "PsaPattern") -> bool:
        """Whether ``pattern`` lies inside the guaranteed capability."""

    @abc.abstractmethod
    def level_choices(self) -> tuple[int, ...]:
        """Level values a single defective cell may carry for this codec."""

    @property
    @abc.abstractmethod
    def u_max(self) -> int: ...

    @property
    @abc.abstractmethod
    def descriptor(self) -> CodecDescriptor: ...

    def message_space_size(self) -> int:
        return math.prod(self.message_radices())

    def redundancy(self) -> Redundancy:
        return Redundancy.from_size(self.q, self.n, self.message_space_size())

    def masks(self, word: Sequence[int], pattern: "PsaPattern") -> bool:
        return all(self.constraint.holds(word[p], s) for p, s in pattern.pairs())
