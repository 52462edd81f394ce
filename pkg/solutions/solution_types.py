from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, ClassVar, Tuple

from bitarray import frozenbitarray

from core.boolean import SignVector
from core.errors import DegenerateError, check_length
from core.neuron import Neuron
from core.utils import Rational, dot, scale_to_integers, sign, sup_norm, to_rational, to_rational_vector


class Encoder(ABC):
    kind: ClassVar[str]

    @property
    @abstractmethod
    def n(self) -> int: ...

    @property
    @abstractmethod
    def m(self) -> int: ...

    def monomials(self) -> tuple[int, ...] | None:
        """Subset mask of the monomial behind every output coordinate, if any."""
        return None

    @abstractmethod
    def parameters(self) -> dict[str, Any]: ...

    def encode(self, x: SignVector) -> SignVector:
        check_length(self.n, x.n, "encoder input")
        return encode_monomials(self.monomials(), x)


def encode_monomials(masks: tuple[int, ...], x: SignVector) -> SignVector:
    bits = frozenbitarray(
        [bool((x.mask & mask).bit_count() & 1) for mask in masks], endian="little"
    )
    return SignVector(bits)


@dataclass(frozen=True)
class Solution:
    encoder: Encoder
    v: tuple[Fraction, ...]
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "v", to_rational_vector(self.v))
        object.__setattr__(self, "mu", to_rational(self.mu))
        check_length(self.encoder.m, len(self.v), "coded weights")
        if not any(self.v):
            raise DegenerateError(f"{self.kind} solution has all-zero coded weights")

    @property
    def kind(self) -> str:
        return self.encoder.kind

    @property
    def n(self) -> int:
        return self.encoder.n

    @property
    def m(self) -> int:
        return self.encoder.m

    @property
    def sup_norm(self) -> Fraction:
        return sup_norm(self.v)

    def encode(self, x: SignVector) -> SignVector:
        return self.encoder.encode(x)

    def coded_value(self, x: SignVector) -> Fraction:
        return dot(self.encode(x), self.v) - self.mu

    def integer_form(self) -> tuple[tuple[int, ...], int]:
        """(v, mu) scaled by a positive common denominator."""
        scaled = scale_to_integers(self.v + (self.mu,))
        return scaled[:-1], scaled[-1]


def coded_evaluate(sol: Solution, x: SignVector) -> int:
    return sign(sol.coded_value(x))


SolutionBuilder = Callable[..., Solution]
PackedBuilder = Tuple[str, SolutionBuilder]
