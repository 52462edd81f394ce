from core.neuron import Neuron
from solutions.encoders import IdentityEncoder
from solutions.solution_types import PackedBuilder, Solution


def identity_solution(nr: Neuron) -> Solution:
    """The uncoded neuron as a solution: (Id, w, theta)."""
    return Solution(IdentityEncoder(nr.n), nr.w, nr.theta)


identity_builder: PackedBuilder = ("identity", identity_solution)
