from core.errors import check_cap
from core.neuron import Neuron, spectrum
from core.settings import settings
from solutions.encoders import PuncturedHadamardEncoder
from solutions.solution_types import PackedBuilder, Solution


def fourier_solution(nr: Neuron, cap: int | None = None) -> Solution:
    """
    All nonempty monomials as the code, the neuron's nonempty Fourier
    coefficients as coded weights, minus the empty coefficient as bias:
    the coded value is exactly tau(x).
    """
    check_cap(nr.n, cap or settings.hadamard_cap, "punctured Hadamard dimension")
    spec = spectrum(nr)
    return Solution(PuncturedHadamardEncoder(nr.n), spec.without_empty(), -spec[0])


fourier_builder: PackedBuilder = ("fourier", fourier_solution)
