"""Relative distances the constructions promise, for comparison with measured ones."""

from fractions import Fraction

from core.errors import DomainError
from core.neuron import Neuron, delta, spectrum
from solutions.encoders import (
    ConstantEncoder,
    GeneralizedParityEncoder,
    ParityEncoder,
    PuncturedHadamardEncoder,
    ReplicationEncoder,
)
from solutions.solution_types import Solution


def expected_relative_distance(sol: Solution) -> Fraction | None:
    """None when the construction makes no promise (identity, or unknown kinds)."""
    encoder = sol.encoder
    while isinstance(encoder, ReplicationEncoder):
        encoder = encoder.inner
    if isinstance(encoder, (ParityEncoder, GeneralizedParityEncoder)):
        return Fraction(2, encoder.m)
    if isinstance(encoder, PuncturedHadamardEncoder):
        return 1 / (sol.sup_norm * encoder.m)
    if isinstance(encoder, ConstantEncoder):
        return Fraction(1)
    return None


def beats_replication(nr: Neuron) -> bool:
    """
    Sufficient condition for generalized parity to out-distance replication:
    ||w||_1 < 2n/delta - 1.
    """
    weights = nr.integer_weights
    if not any(weights):
        raise DomainError("all-zero weights")
    span = sum(abs(c) for c in weights)
    return span < 2 * nr.n / delta(nr) - 1


def fourier_distance(nr: Neuron) -> Fraction:
    """1 / max |coefficient| over nonempty subsets."""
    norm = spectrum(nr).sup_norm_nonempty()
    if not norm:
        raise DomainError("constant neuron has no nonempty Fourier mass")
    return 1 / norm
