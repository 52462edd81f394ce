"""
Geometric robustness criterion: a coded neuron is r-robust iff it agrees
with the neuron everywhere, every encoded positive point is at clipped l1
distance >= r from the hyperplane and every encoded negative point at
distance > r.
"""

from typing import NamedTuple

from loguru import logger

from core.boolean import enumerate_hypercube
from core.errors import DomainError
from core.neuron import Neuron, evaluate
from core.utils import Distance, distance_to_str
from robustness.distance import class_distances
from solutions.solution_types import Solution, coded_evaluate


class CriterionVerdict(NamedTuple):
    agreement: bool
    positive: Distance
    negative: Distance
    robust: bool


def coded_agreement(sol: Solution, nr: Neuron) -> bool:
    return all(coded_evaluate(sol, x) == evaluate(nr, x) for x in enumerate_hypercube(nr.n))


def criterion_detail(sol: Solution, nr: Neuron, r: int, literal: bool = False) -> CriterionVerdict:
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"the criterion is stated for positive integers r, got {r!r}")
    if sol.n != nr.n:
        raise DomainError(f"solution codes {sol.n} inputs but the neuron has {nr.n}")
    agreement = coded_agreement(sol, nr)
    positive, negative = class_distances(sol, nr, literal=literal)
    robust = agreement and r <= positive and r < negative
    return CriterionVerdict(agreement, positive, negative, robust)


def distance_criterion(sol: Solution, nr: Neuron, r: int, literal: bool = False) -> bool:
    """
    literal=True reads the positive-side distance as the plain clipped
    distance; the default only counts hyperplane contact that can be pushed
    past, which is what a sign(0) = +1 neuron needs.
    """
    verdict = criterion_detail(sol, nr, r, literal)
    if not literal:
        literal_verdict = criterion_detail(sol, nr, r, literal=True)
        if literal_verdict.robust != verdict.robust:
            logger.warning(
                f"{sol.kind} solution, r={r}: positive points touch the clipped hyperplane only "
                f"at a saturated vertex (distance {distance_to_str(literal_verdict.positive)}); "
                f"counted as unreachable"
            )
    return verdict.robust
