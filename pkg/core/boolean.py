"""
Exact +-1 Boolean algebra.

A point of the hypercube is a SignVector: entries in {+1, -1}, stored one bit
per entry (bit 0 <-> +1, bit 1 <-> -1), so that pointwise product is XOR and
Hamming weight is a popcount. Subsets of coordinates are bitmasks, bit j for
coordinate j.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from bitarray import frozenbitarray

from core.errors import DimensionError, DomainError, check_cap, check_length
from core.settings import settings
from core.utils import (
    Rational,
    bits_to_mask,
    indices_to_mask,
    mask_to_bits,
    mask_to_indices,
    reverse_bits,
)


class SignVector:
    __slots__ = ("_bits", "_mask")

    def __init__(self, bits: frozenbitarray):
        if not len(bits):
            raise DimensionError("sign vector must have positive length")
        self._bits = frozenbitarray(bits)
        self._mask = bits_to_mask(self._bits)

    @classmethod
    def from_signs(cls, entries: Iterable[int]) -> "SignVector":
        entries = list(entries)
        for value in entries:
            if value not in (1, -1):
                raise DomainError(f"sign vector entry {value!r} is not +1 or -1")
        return cls(frozenbitarray([value == -1 for value in entries], endian="little"))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "SignVector":
        """Bit j of mask set <-> entry j is -1."""
        if n <= 0:
            raise DimensionError("sign vector must have positive length")
        if mask < 0 or mask >> n:
            raise DimensionError(f"mask {mask} does not fit {n} coordinates")
        return cls(mask_to_bits(mask, n))

    @classmethod
    def ones(cls, n: int) -> "SignVector":
        return cls.from_mask(0, n)

    @property
    def n(self) -> int:
        return len(self._bits)

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def bits(self) -> frozenbitarray:
        return self._bits

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(-1 if bit else 1 for bit in self._bits)

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return -1 if self._bits[index] else 1

    def __eq__(self, other) -> bool:
        if isinstance(other, SignVector):
            return self.n == other.n and self._mask == other._mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self._mask))

    def __repr__(self) -> str:
        return f"SignVector({self.entries})"

    def __mul__(self, other: "SignVector") -> "SignVector":
        return xor(self, other)


@dataclass(frozen=True)
class NoisySignVector:
    """A coded vector after noise: erased coordinates read 0."""

    entries: tuple[int, ...]

    def __post_init__(self):
        for value in self.entries:
            if value not in (-1, 0, 1):
                raise DomainError(f"noisy entry {value!r} is not in {{-1, 0, 1}}")

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def erased(self) -> frozenset[int]:
        return frozenset(j for j, value in enumerate(self.entries) if value == 0)

    def dot(self, v: Sequence[Rational]) -> Fraction:
        check_length(self.m, len(v), "weight vector")
        return sum((Fraction(c) * y for c, y in zip(v, self.entries) if y), Fraction(0))


def xor(a: SignVector, b: SignVector) -> SignVector:
    check_length(a.n, b.n)
    return SignVector(a.bits ^ b.bits)


def hamming_weight(x: SignVector) -> int:
    return x.bits.count(1)


def subset_mask(subset: Iterable[int] | int, n: int) -> int:
    if isinstance(subset, int):
        mask = subset
        if mask < 0 or mask >> n:
            raise DimensionError(f"subset mask {mask} out of range for n={n}")
        return mask
    subset = list(subset)
    for i in subset:
        if not 0 <= i < n:
            raise DimensionError(f"index {i} out of range for n={n}")
    return indices_to_mask(subset)


def chi(subset: Iterable[int] | int, x: SignVector) -> int:
    """The parity monomial: product of the entries of x indexed by subset."""
    mask = subset_mask(subset, x.n)
    return -1 if (x.mask & mask).bit_count() & 1 else 1


def inner_product(x: SignVector, w: SignVector) -> int:
    return x.n - 2 * hamming_weight(xor(x, w))


def hypercube_order(index: int, n: int) -> SignVector:
    """The index-th point of the enumeration (first coordinate most significant)."""
    return SignVector.from_mask(reverse_bits(index, n), n)


def enumerate_hypercube(
    n: int, cap: int | None = None, start: int = 0, stop: int | None = None
) -> Iterator[SignVector]:
    """
    All 2**n sign vectors in lexicographic order with +1 < -1, i.e.
    (1,...,1,1), (1,...,1,-1), ..., (-1,...,-1). start/stop select a
    contiguous slice of that order.
    """
    if n <= 0:
        raise DimensionError("hypercube dimension must be positive")
    check_cap(n, cap or settings.hypercube_cap, "hypercube dimension")
    stop = 1 << n if stop is None else min(stop, 1 << n)
    for index in range(start, stop):
        yield hypercube_order(index, n)


def truth_table(f: Callable[[SignVector], Rational], n: int) -> dict[SignVector, Rational]:
    return {x: f(x) for x in enumerate_hypercube(n)}


class Spectrum:
    """Fourier coefficients indexed by subset bitmask."""

    __slots__ = ("n", "coefficients")

    def __init__(self, n: int, coefficients: Sequence[Fraction]):
        check_length(1 << n, len(coefficients), "spectrum")
        self.n = n
        self.coefficients = tuple(Fraction(c) for c in coefficients)

    def __getitem__(self, subset: Iterable[int] | int) -> Fraction:
        return self.coefficients[subset_mask(subset, self.n)]

    def __eq__(self, other) -> bool:
        if isinstance(other, Spectrum):
            return self.n == other.n and self.coefficients == other.coefficients
        return NotImplemented

    def __repr__(self) -> str:
        nonzero = {mask_to_indices(s): c for s, c in enumerate(self.coefficients) if c}
        return f"Spectrum(n={self.n}, {nonzero})"

    def without_empty(self) -> tuple[Fraction, ...]:
        return self.coefficients[1:]

    def sup_norm_nonempty(self) -> Fraction:
        return max((abs(c) for c in self.without_empty()), default=Fraction(0))

    def squared_norm(self) -> Fraction:
        return sum((c * c for c in self.coefficients), Fraction(0))

    def reconstruct(self, x: SignVector) -> Fraction:
        check_length(self.n, x.n)
        return sum(
            (c * chi(s, x) for s, c in enumerate(self.coefficients) if c),
            Fraction(0),
        )

    def top(self, k: int) -> list[tuple[tuple[int, ...], Fraction]]:
        ranked = sorted(
            (s for s, c in enumerate(self.coefficients) if c),
            key=lambda s: (-abs(self.coefficients[s]), s),
        )
        return [(mask_to_indices(s), self.coefficients[s]) for s in ranked[:k]]


def walsh_hadamard(
    table: Mapping[SignVector, Rational], n: int, cap: int | None = None
) -> Spectrum:
    """
    Exact spectrum: coefficient(S) = average over x of chi_S(x) f(x),
    by the in-place butterfly over the table indexed by point mask.
    """
    check_cap(n, cap or settings.spectrum_cap, "spectrum dimension")
    size = 1 << n
    values: list[Fraction] = [Fraction(0)] * size
    seen = 0
    for x, value in table.items():
        check_length(n, x.n, "truth table point")
        values[x.mask] = Fraction(value)
        seen += 1
    if seen != size:
        raise DomainError(f"truth table has {seen} of {size} points")

    h = 1
    while h < size:
        for i in range(0, size, h << 1):
            for j in range(i, i + h):
                a, b = values[j], values[j + h]
                values[j], values[j + h] = a + b, a - b
        h <<= 1
    return Spectrum(n, [v / size for v in values])
