from core.errors import check_cap
from core.neuron import Neuron
from core.settings import settings
from solutions.encoders import ConstantEncoder
from solutions.solution_types import PackedBuilder, Solution


def constant_solution(nr: Neuron, m: int) -> Solution:
    """
    Baseline code that already knows the answer: E(x) = tau(x) * ones(m),
    v = ones(m), mu = 0. Only useful as a reference point.
    """
    check_cap(nr.n, settings.hypercube_cap, "neuron dimension")
    return Solution(ConstantEncoder(nr, m), (1,) * m, 0)


constant_builder: PackedBuilder = ("constant", constant_solution)
