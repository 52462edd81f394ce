"""
l1 distances from a point to a hyperplane H(v, mu) = {y : y.v = mu}, both
unrestricted and restricted to the cube [-1, 1]^m.
"""

from fractions import Fraction
from typing import NamedTuple, Sequence

from core.errors import DegenerateError, DomainError, check_length
from core.utils import INFINITY, Distance, Rational, dot, sup_norm, to_rational_vector


class Saturation(NamedTuple):
    distance: Distance
    spare: Fraction  # movement power left once H is reached


def _check(z: Sequence[Rational], v: Sequence[Rational]):
    check_length(len(v), len(z), "point")
    if not any(v):
        raise DegenerateError("hyperplane normal is all-zero")


def l1_distance_to_hyperplane(z: Sequence[Rational], v: Sequence[Rational], mu: Rational) -> Fraction:
    _check(z, v)
    return abs(dot(z, v) - Fraction(mu)) / sup_norm(v)


def saturate(z: Sequence[Rational], v: Sequence[Rational], mu: Rational) -> Saturation:
    """
    Greedy walk from z towards H inside the cube: spend movement on the
    coordinate with the largest |v_i| first (lowest index among ties), moving
    it to the face that shrinks |z.v - mu|, until H is reached or every
    coordinate is saturated.
    """
    z = to_rational_vector(z)
    v = to_rational_vector(v)
    _check(z, v)
    for zi in z:
        if abs(zi) > 1:
            raise DomainError(f"point {z} lies outside the cube [-1, 1]^{len(z)}")

    g = dot(z, v) - Fraction(mu)
    direction = 1 if g >= 0 else -1  # sign of the side z is on
    remaining = abs(g)
    distance = Fraction(0)
    order = sorted(range(len(v)), key=lambda i: (-abs(v[i]), i))
    reached = False
    spare = Fraction(0)
    for i in order:
        if not v[i]:
            break
        # moving z_i by one unit towards -direction*sign(v_i) lowers direction*g by |v_i|
        capacity = z[i] + 1 if direction * v[i] > 0 else 1 - z[i]
        power = abs(v[i]) * capacity
        if reached:
            spare += power
            continue
        if power >= remaining:
            distance += remaining / abs(v[i])
            spare += power - remaining
            reached = True
        else:
            distance += capacity
            remaining -= power
    if not reached:
        return Saturation(INFINITY, Fraction(0))
    return Saturation(distance, spare)


def l1_distance_to_clipped(z: Sequence[Rational], v: Sequence[Rational], mu: Rational) -> Distance:
    """Exact min ||z - y||_1 over y in H(v, mu) within the cube; +inf if unreachable."""
    return saturate(z, v, mu).distance


def l1_distance_across_clipped(z: Sequence[Rational], v: Sequence[Rational], mu: Rational) -> Distance:
    """
    Distance needed to get strictly past H from the nonnegative side: the
    clipped distance when some movement is left over at H, +inf when H is
    only touched with the cube exhausted.
    """
    result = saturate(z, v, mu)
    return result.distance if result.spare > 0 else INFINITY
