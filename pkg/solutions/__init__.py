from typing import Iterable, List

from core.errors import DomainError
from core.neuron import Neuron, canonicalize_bias, canonicalize_integer_bias
from solutions.constant import constant_builder
from solutions.fourier import fourier_builder
from solutions.identity import identity_builder
from solutions.parity import generalized_parity_builder, parity_builder
from solutions.replication import replication_builder
from solutions.solution_types import PackedBuilder, Solution, SolutionBuilder


class Builders:
    builders: dict[str, SolutionBuilder] = {}

    def register(self, to_add: PackedBuilder | List[PackedBuilder]):
        if not isinstance(to_add, list):
            to_add = [to_add]
        for kind, builder in to_add:
            self.builders[kind] = builder

    def __iter__(self):
        return iter(self.builders)

    def __contains__(self, kind: str) -> bool:
        return kind in self.builders

    def __getitem__(self, kind: str) -> SolutionBuilder:
        if kind not in self.builders:
            raise DomainError(f"unknown solution kind '{kind}', expected one of {list(self.builders)}")
        return self.builders[kind]

    def keys(self):
        return self.builders.keys()


builders = Builders()
builders.register(
    [
        identity_builder,
        replication_builder,
        parity_builder,
        generalized_parity_builder,
        fourier_builder,
        constant_builder,
    ]
)

# kinds taking a positive integer after a colon, e.g. "replication:2"
PARAMETRIC = {"replication", "constant"}


def parse_kind(spec: str) -> tuple[str, int | None]:
    kind, _, param = spec.partition(":")
    if kind not in builders:
        raise DomainError(f"unknown solution kind '{kind}', expected one of {list(builders)}")
    if kind in PARAMETRIC:
        if not param.isdigit() or int(param) < 1:
            raise DomainError(f"solution '{spec}' needs a positive integer, e.g. '{kind}:2'")
        return kind, int(param)
    if param:
        raise DomainError(f"solution kind '{kind}' takes no parameter")
    return kind, None


def prepare_neuron(kind: str, nr: Neuron) -> Neuron:
    """Canonicalize the bias where the construction requires it."""
    if kind == "parity":
        return canonicalize_bias(nr)
    if kind == "gen-parity":
        return canonicalize_integer_bias(nr)
    return nr


def build_solution(spec: str, nr: Neuron) -> tuple[Solution, Neuron]:
    """
    Build the solution named by a kind spec such as "parity" or "constant:4".
    Returns it with the (possibly canonicalized) neuron it codes.
    """
    kind, param = parse_kind(spec)
    nr = prepare_neuron(kind, nr)
    builder = builders[kind]
    sol = builder(nr) if param is None else builder(nr, param)
    return sol, nr


def comparison_kinds(nr: Neuron) -> Iterable[str]:
    yield "identity"
    yield "replication:2"
    if nr.is_binary:
        yield "parity"
    if nr.is_integer:
        yield "gen-parity"
    yield "fourier"
    yield f"constant:{nr.n + 1}"
