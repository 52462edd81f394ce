from core.errors import DomainError
from core.neuron import Neuron
from solutions.encoders import ReplicationEncoder
from solutions.identity import identity_solution
from solutions.solution_types import PackedBuilder, Solution


def replicate(sol: Solution, ell: int) -> Solution:
    """Concatenate ell copies of the code and the coded weights; the bias scales by ell."""
    if ell < 1:
        raise DomainError(f"replication factor must be positive, got {ell}")
    if ell == 1:
        return sol
    return Solution(ReplicationEncoder(sol.encoder, ell), sol.v * ell, sol.mu * ell)


def replication_solution(nr: Neuron, ell: int) -> Solution:
    return replicate(identity_solution(nr), ell)


replication_builder: PackedBuilder = ("replication", replication_solution)
