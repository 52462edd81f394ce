from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, NamedTuple

from core.boolean import NoisySignVector, SignVector
from core.errors import DimensionError, DomainError
from core.utils import sign
from solutions.solution_types import Solution


@dataclass(frozen=True)
class NoisePattern:
    """Erased coordinates read 0, errored coordinates are negated."""

    erasures: frozenset[int] = field(default_factory=frozenset)
    errors: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "erasures", frozenset(self.erasures))
        object.__setattr__(self, "errors", frozenset(self.errors))
        if self.erasures & self.errors:
            raise DomainError(
                f"coordinates {sorted(self.erasures & self.errors)} are both erased and in error"
            )
        if any(j < 0 for j in self.erasures | self.errors):
            raise DimensionError("noise pattern indices must be nonnegative")

    @classmethod
    def of(cls, erasures: Iterable[int] = (), errors: Iterable[int] = ()) -> "NoisePattern":
        return cls(frozenset(erasures), frozenset(errors))

    @property
    def t(self) -> int:
        return len(self.erasures)

    @property
    def s(self) -> int:
        return len(self.errors)

    @property
    def cost(self) -> int:
        return self.t + 2 * self.s

    @property
    def is_empty(self) -> bool:
        return not self.erasures and not self.errors

    def check(self, m: int):
        touched = self.erasures | self.errors
        if touched and max(touched) >= m:
            raise DimensionError(f"noise pattern index {max(touched)} out of range for m={m}")

    def apply(self, z: SignVector) -> NoisySignVector:
        self.check(z.n)
        return NoisySignVector(
            tuple(
                0 if j in self.erasures else -y if j in self.errors else y
                for j, y in enumerate(z)
            )
        )

    def __repr__(self) -> str:
        return f"NoisePattern(erasures={sorted(self.erasures)}, errors={sorted(self.errors)})"


EMPTY_PATTERN = NoisePattern()


class Witness(NamedTuple):
    x: SignVector
    pattern: NoisePattern


def count_patterns(m: int, t: int, s: int) -> int:
    return comb(m, t) * comb(m - t, s) if t + s <= m else 0


def enumerate_patterns(m: int, t: int, s: int) -> Iterator[NoisePattern]:
    """Erasure sets in lexicographic order, then error sets among the rest."""
    for erased in combinations(range(m), t):
        rest = [j for j in range(m) if j not in erased]
        for errored in combinations(rest, s):
            yield NoisePattern(frozenset(erased), frozenset(errored))


def cost_split(r: int) -> Iterator[tuple[int, int]]:
    """All (t, s) with t + 2s == r, fewest errors first."""
    for s in range(r // 2 + 1):
        yield r - 2 * s, s


def noisy_value(sol: Solution, x: SignVector, p: NoisePattern) -> Fraction:
    p.check(sol.m)
    return p.apply(sol.encode(x)).dot(sol.v) - sol.mu


def noisy_evaluate(sol: Solution, x: SignVector, p: NoisePattern) -> int:
    return sign(noisy_value(sol, x, p))
