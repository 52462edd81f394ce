from dataclasses import dataclass
from typing import Any

from bitarray import frozenbitarray

from core.boolean import SignVector
from core.errors import DomainError, check_length
from core.neuron import Neuron, evaluate
from core.utils import rational_to_str
from solutions.solution_types import Encoder


@dataclass(frozen=True)
class IdentityEncoder(Encoder):
    kind = "identity"
    size: int

    @property
    def n(self) -> int:
        return self.size

    @property
    def m(self) -> int:
        return self.size

    def monomials(self) -> tuple[int, ...]:
        return tuple(1 << j for j in range(self.size))

    def parameters(self) -> dict[str, Any]:
        return {"n": self.size}

    def encode(self, x: SignVector) -> SignVector:
        check_length(self.n, x.n, "encoder input")
        return x


@dataclass(frozen=True)
class ParityEncoder(Encoder):
    """x -> (x_1, ..., x_n, x_1 x_2 ... x_n)"""

    kind = "parity"
    size: int

    @property
    def n(self) -> int:
        return self.size

    @property
    def m(self) -> int:
        return self.size + 1

    def monomials(self) -> tuple[int, ...]:
        return tuple(1 << j for j in range(self.size)) + ((1 << self.size) - 1,)

    def parameters(self) -> dict[str, Any]:
        return {"n": self.size}


@dataclass(frozen=True)
class GeneralizedParityEncoder(Encoder):
    """
    x_i repeated |w_i| times for every i, then the product of the x_i with
    odd w_i. Zero weights contribute no copies and stay out of the product.
    """

    kind = "gen-parity"
    weights: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        return sum(abs(c) for c in self.weights) + 1

    def monomials(self) -> tuple[int, ...]:
        copies = tuple(1 << i for i, c in enumerate(self.weights) for _ in range(abs(c)))
        odd = sum(1 << i for i, c in enumerate(self.weights) if c % 2)
        return copies + (odd,)

    def parameters(self) -> dict[str, Any]:
        return {"weights": list(self.weights)}


@dataclass(frozen=True)
class PuncturedHadamardEncoder(Encoder):
    """All nonempty monomials, ordered by subset mask."""

    kind = "fourier"
    size: int

    @property
    def n(self) -> int:
        return self.size

    @property
    def m(self) -> int:
        return (1 << self.size) - 1

    def monomials(self) -> tuple[int, ...]:
        return tuple(range(1, 1 << self.size))

    def parameters(self) -> dict[str, Any]:
        return {"n": self.size}


@dataclass(frozen=True)
class ReplicationEncoder(Encoder):
    kind = "replication"
    inner: Encoder
    ell: int

    def __post_init__(self):
        if self.ell < 1:
            raise DomainError(f"replication factor must be positive, got {self.ell}")

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def m(self) -> int:
        return self.inner.m * self.ell

    def monomials(self) -> tuple[int, ...] | None:
        inner = self.inner.monomials()
        return None if inner is None else inner * self.ell

    def parameters(self) -> dict[str, Any]:
        return {
            "ell": self.ell,
            "inner": {"kind": self.inner.kind, "parameters": self.inner.parameters()},
        }

    def encode(self, x: SignVector) -> SignVector:
        inner = self.inner.encode(x)
        return SignVector(frozenbitarray(inner.bits.tolist() * self.ell, endian="little"))


@dataclass(frozen=True)
class ConstantEncoder(Encoder):
    """Maps x to all-ones when the target neuron fires, to all minus-ones otherwise."""

    kind = "constant"
    target: Neuron
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise DomainError(f"code length must be positive, got {self.length}")

    @property
    def n(self) -> int:
        return self.target.n

    @property
    def m(self) -> int:
        return self.length

    def parameters(self) -> dict[str, Any]:
        return {
            "m": self.length,
            "weights": [rational_to_str(c) for c in self.target.w],
            "bias": rational_to_str(self.target.theta),
        }

    def encode(self, x: SignVector) -> SignVector:
        check_length(self.n, x.n, "encoder input")
        mask = 0 if evaluate(self.target, x) == 1 else (1 << self.length) - 1
        return SignVector.from_mask(mask, self.length)


def encode(e: Encoder, x: SignVector) -> SignVector:
    return e.encode(x)
