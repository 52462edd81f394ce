import math
import re
from fractions import Fraction
from functools import reduce, wraps
from typing import Iterable, Union

from bitarray import frozenbitarray
from bitarray.util import ba2int, int2ba

Rational = Union[int, Fraction]
Distance = Union[Fraction, float]  # float only for +infinity

INFINITY = math.inf

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$")


def optional_value(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        if len(args) > 0 and args[0] is None:
            return None
        return func(*args, **kwargs)

    return wrapper


# exact rationals
def to_rational(value) -> Fraction:
    """
    Convert an int, Fraction or exact rational string to Fraction.
    Floats are refused: their binary value is rarely the intended one.
    """
    if isinstance(value, bool):
        raise ValueError(f"Invalid rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"Invalid rational: '{value}'")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError(f"Invalid rational: '{value}'")
    raise ValueError(f"Invalid rational: {value!r}")


def to_rational_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


@optional_value
def rational_to_str(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def distance_to_str(value: Distance) -> str:
    if value == INFINITY:
        return "inf"
    return rational_to_str(value)


def sign(value) -> int:
    # sign(0) = +1
    return 1 if value >= 0 else -1


def sup_norm(values: Iterable[Rational]) -> Fraction:
    return max((abs(Fraction(v)) for v in values), default=Fraction(0))


def l1_norm(values: Iterable[Rational]) -> Fraction:
    return sum((abs(Fraction(v)) for v in values), Fraction(0))


def dot(a: Iterable[Rational], b: Iterable[Rational]) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def common_denominator(values: Iterable[Rational]) -> int:
    return reduce(math.lcm, (Fraction(v).denominator for v in values), 1)


def scale_to_integers(values: Iterable[Rational]) -> tuple[int, ...]:
    """Multiply by the common denominator; signs and ratios are preserved."""
    values = [Fraction(v) for v in values]
    scale = common_denominator(values)
    return tuple(int(v * scale) for v in values)


# bit helpers, bit j of a mask <-> coordinate j
def mask_to_bits(mask: int, length: int) -> frozenbitarray:
    return frozenbitarray(int2ba(mask, length=length, endian="little"))


def bits_to_mask(bits) -> int:
    if not len(bits):
        return 0
    return ba2int(bits) if bits.endian() == "little" else ba2int(bits[::-1])


def reverse_bits(value: int, length: int) -> int:
    return int(format(value, f"0{length}b")[::-1], 2) if length else 0


def mask_to_indices(mask: int) -> tuple[int, ...]:
    indices = []
    j = 0
    while mask:
        if mask & 1:
            indices.append(j)
        mask >>= 1
        j += 1
    return tuple(indices)


def indices_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask
