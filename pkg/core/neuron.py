"""
Linear threshold neurons tau(x) = sign(x.w - theta) with exact rational
weights and bias, sign(0) = +1.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, NamedTuple

from loguru import logger

from core.boolean import (
    SignVector,
    Spectrum,
    enumerate_hypercube,
    hamming_weight,
    walsh_hadamard,
    xor,
)
from core.errors import DegenerateError, DomainError, check_cap, check_length
from core.settings import settings
from core.utils import Rational, l1_norm, sign, sup_norm, to_rational, to_rational_vector


@dataclass(frozen=True)
class Neuron:
    w: tuple[Fraction, ...]
    theta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "w", to_rational_vector(self.w))
        object.__setattr__(self, "theta", to_rational(self.theta))
        if not self.w:
            raise DomainError("neuron needs at least one weight")

    @classmethod
    def of(cls, w: Iterable[Rational | str], theta: Rational | str = 0) -> "Neuron":
        return cls(tuple(w), theta)

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def is_zero(self) -> bool:
        return not any(self.w)

    @property
    def is_binary(self) -> bool:
        return all(abs(c) == 1 for c in self.w)

    @property
    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.w)

    @property
    def integer_weights(self) -> tuple[int, ...]:
        if not self.is_integer:
            raise DomainError(f"weights {self.w} are not all integers")
        return tuple(int(c) for c in self.w)

    def pre_activation(self, x: SignVector) -> Fraction:
        check_length(self.n, x.n, "input")
        return sum((c * xi for c, xi in zip(self.w, x)), Fraction(0)) - self.theta


class BinaryNeuron(Neuron):
    """A neuron with +-1 weights and a canonical bias (n - theta odd, |theta| <= n+1)."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_binary:
            raise DomainError(f"weights {self.w} are not all +-1")
        if not is_canonical_bias(self.theta, self.n):
            raise DomainError(
                f"bias {self.theta} is not canonical for n={self.n}; canonicalize it first"
            )

    @property
    def signs(self) -> SignVector:
        return SignVector.from_signs(int(c) for c in self.w)


class HammingThresholds(NamedTuple):
    pos_bound: int
    neg_bound: int


class PointClasses(NamedTuple):
    positive: frozenset[SignVector]
    negative: frozenset[SignVector]


def evaluate(nr: Neuron, x: SignVector) -> int:
    return sign(nr.pre_activation(x))


def is_constant(nr: Neuron) -> bool:
    values = {evaluate(nr, x) for x in enumerate_hypercube(nr.n)}
    return len(values) == 1


def is_canonical_bias(theta: Fraction, span: int) -> bool:
    return theta.denominator == 1 and abs(theta) <= span + 1 and (span - theta) % 2 == 1


def canonical_bias(theta: Rational, span: int) -> Fraction:
    """
    Round theta into {-span-1, -span+1, ..., span+1} without changing the
    neuron, given that x.w only takes the values -span, -span+2, ..., span.
    """
    theta = Fraction(theta)
    if theta <= -span:
        return Fraction(-span - 1)
    if theta > span:
        return Fraction(span + 1)
    # theta in (-span+2t, -span+2t+2]
    t = floor((theta + span) / 2)
    if theta + span == 2 * t:
        t -= 1
    return Fraction(-span + 2 * t + 1)


def canonicalize_bias(nr: Neuron) -> BinaryNeuron:
    if not nr.is_binary:
        raise DomainError(f"weights {nr.w} are not all +-1")
    theta = canonical_bias(nr.theta, nr.n)
    if theta != nr.theta:
        logger.debug(f"Bias {nr.theta} canonicalized to {theta} for n={nr.n}")
    return BinaryNeuron(nr.w, theta)


def canonicalize_integer_bias(nr: Neuron) -> Neuron:
    """Same rounding with n replaced by the l1 norm of integer weights."""
    weights = nr.integer_weights
    span = sum(abs(c) for c in weights)
    if not span:
        raise DegenerateError("all-zero weights have no canonical bias")
    return Neuron(nr.w, canonical_bias(nr.theta, span))


def delta(nr: Neuron, cap: int | None = None) -> Fraction:
    """The neuron's own l1 margin: min over x of |x.w - theta| / max|w_i|."""
    if nr.is_zero:
        raise DegenerateError("delta is undefined for all-zero weights")
    norm = sup_norm(nr.w)
    return min(abs(nr.pre_activation(x)) for x in enumerate_hypercube(nr.n, cap)) / norm


def classify_points(nr: Neuron, cap: int | None = None) -> PointClasses:
    positive, negative = set(), set()
    for x in enumerate_hypercube(nr.n, cap):
        (positive if evaluate(nr, x) == 1 else negative).add(x)
    return PointClasses(frozenset(positive), frozenset(negative))


def hamming_thresholds(bn: Neuron) -> HammingThresholds:
    """
    tau(x) = +1 iff w_H(x xor w) <= pos_bound, and -1 iff it is >= neg_bound.
    """
    if not bn.is_binary:
        raise DomainError(f"weights {bn.w} are not all +-1")
    if not is_canonical_bias(bn.theta, bn.n):
        raise DomainError(f"bias {bn.theta} is not canonical for n={bn.n}")
    pos_bound = int((bn.n - bn.theta - 1) / 2)
    return HammingThresholds(pos_bound, pos_bound + 1)


def evaluate_by_hamming(bn: BinaryNeuron, x: SignVector) -> int:
    pos_bound, _ = hamming_thresholds(bn)
    return 1 if hamming_weight(xor(x, bn.signs)) <= pos_bound else -1


def spectrum(nr: Neuron, cap: int | None = None) -> Spectrum:
    cap = cap or settings.spectrum_cap
    check_cap(nr.n, cap, "spectrum dimension")
    table = {x: evaluate(nr, x) for x in enumerate_hypercube(nr.n)}
    return walsh_hadamard(table, nr.n, cap)


def l1_weight(nr: Neuron) -> Fraction:
    return l1_norm(nr.w)
