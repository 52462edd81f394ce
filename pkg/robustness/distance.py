from fractions import Fraction
from typing import NamedTuple, Sequence

from core.boolean import enumerate_hypercube
from core.errors import DomainError
from core.neuron import Neuron, evaluate
from core.utils import INFINITY, Distance, Rational
from robustness.geometry import l1_distance_across_clipped, l1_distance_to_clipped
from solutions.solution_types import Encoder, Solution


class ClassDistances(NamedTuple):
    positive: Distance
    negative: Distance


def min_distance(sol: Solution, cap: int | None = None) -> Fraction:
    """Least l1 distance from an encoded point to the unrestricted decision hyperplane."""
    norm = sol.sup_norm
    return min(abs(sol.coded_value(x)) for x in enumerate_hypercube(sol.n, cap)) / norm


def relative_distance(sol: Solution, cap: int | None = None) -> Fraction:
    return min_distance(sol, cap) / sol.m


def joint_min_distance(e: Encoder, pairs: Sequence[tuple[Sequence[Rational], Rational]]) -> Fraction:
    """Worst minimum distance over neurons sharing one encoder."""
    if not pairs:
        raise DomainError("joint distance needs at least one (v, mu) pair")
    return min(min_distance(Solution(e, tuple(v), mu)) for v, mu in pairs)


def class_distances(sol: Solution, nr: Neuron, literal: bool = False) -> ClassDistances:
    """
    Clipped-hyperplane distances of the encoded positive and negative points.
    Unless literal, a positive point counts only movement that gets strictly
    past the hyperplane, since landing on it still reads +1.
    """
    positive: Distance = INFINITY
    negative: Distance = INFINITY
    across = l1_distance_to_clipped if literal else l1_distance_across_clipped
    for x in enumerate_hypercube(sol.n):
        z = sol.encode(x).entries
        if evaluate(nr, x) == 1:
            positive = min(positive, across(z, sol.v, sol.mu))
        else:
            negative = min(negative, l1_distance_to_clipped(z, sol.v, sol.mu))
    return ClassDistances(positive, negative)
