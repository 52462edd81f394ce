from fractions import Fraction

from loguru import logger

from core.errors import DegenerateError, DomainError
from core.neuron import Neuron, is_canonical_bias
from solutions.encoders import GeneralizedParityEncoder, ParityEncoder
from solutions.solution_types import PackedBuilder, Solution


def _redundancy_weight(span: int, theta: Fraction, negatives: int) -> int:
    # (-1)^theta' * chi(w), theta' = (span - theta - 1) / 2
    theta_prime = int((span - theta - 1) / 2)
    return (-1) ** ((theta_prime + negatives) % 2)


def parity_solution(bn: Neuron) -> Solution:
    """
    One extra coordinate carrying the parity of the input; the redundancy
    weight is chosen so that every encoded point sits at l1 distance >= 2
    from the decision hyperplane.
    """
    if not bn.is_binary:
        raise DomainError(f"weights {bn.w} are not all +-1")
    if not is_canonical_bias(bn.theta, bn.n):
        raise DomainError(f"bias {bn.theta} is not canonical for n={bn.n}")
    negatives = sum(1 for c in bn.w if c < 0)
    v = bn.w + (Fraction(_redundancy_weight(bn.n, bn.theta, negatives)),)
    return Solution(ParityEncoder(bn.n), v, bn.theta)


def generalized_parity_solution(nr: Neuron) -> Solution:
    """
    Parity over the sign-replicated input: x_i repeated |w_i| times, the
    coded weights are the matching signs of w_i, plus one parity coordinate.
    """
    weights = nr.integer_weights
    span = sum(abs(c) for c in weights)
    if not span:
        raise DegenerateError("generalized parity needs a nonzero weight")
    if not is_canonical_bias(nr.theta, span):
        raise DomainError(
            f"bias {nr.theta} is not canonical for l1 weight {span}; canonicalize it first"
        )
    ones_w = tuple(Fraction(1 if c > 0 else -1) for c in weights for _ in range(abs(c)))
    negatives = sum(1 for c in ones_w if c < 0)
    v = ones_w + (Fraction(_redundancy_weight(span, nr.theta, negatives)),)
    logger.debug(f"Generalized parity for w={weights}: m={span + 1}")
    return Solution(GeneralizedParityEncoder(weights), v, nr.theta)


parity_builder: PackedBuilder = ("parity", parity_solution)
generalized_parity_builder: PackedBuilder = ("gen-parity", generalized_parity_solution)
