"""
Layer-wise parity coding of binary networks: the input gains its parity
bit, every hidden layer gains a parity gate over its outputs, and every
neuron is replaced by its parity-coded version over the widened layer below.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Mapping, NamedTuple, Sequence

from core.boolean import SignVector
from core.errors import DimensionError, DomainError, check_length
from core.settings import settings
from core.utils import sign
from network.layered import LayeredNetwork, forward
from robustness.distance import joint_min_distance
from robustness.noise import NoisePattern
from solutions.encoders import ParityEncoder
from solutions.identity import identity_solution
from solutions.parity import parity_solution
from solutions.solution_types import Solution

SCHEMES = ("parity", "identity")

Wires = tuple[int, ...]  # values in {-1, 0, 1}


@dataclass(frozen=True)
class CodedNetwork:
    original: LayeredNetwork
    scheme: str
    solutions: tuple[tuple[Solution, ...], ...]

    @property
    def has_parity(self) -> bool:
        return self.scheme == "parity"

    def reading_width(self, layer: int) -> int:
        """Number of coded synapses entering each neuron of the given layer."""
        return self.original.widths[layer] + (1 if self.has_parity else 0)

    @property
    def gate_layers(self) -> range:
        """Layers whose outputs feed a parity gate (all but the last)."""
        return range(self.original.depth - 1) if self.has_parity else range(0)


@dataclass(frozen=True)
class FaultPlan:
    """
    synapses: per (layer, neuron), noise on that neuron's incoming coded synapses.
    wires: per layer, noise on the coded wires the layer reads (shared-wire mode).
    gates: per layer, noise on the parity gate's readings of that layer's outputs.
    """

    synapses: Mapping[tuple[int, int], NoisePattern] = field(default_factory=dict)
    wires: Mapping[int, NoisePattern] = field(default_factory=dict)
    gates: Mapping[int, NoisePattern] = field(default_factory=dict)
    max_cost: int | None = None

    @property
    def is_empty(self) -> bool:
        return not any(
            not p.is_empty
            for p in (*self.synapses.values(), *self.wires.values(), *self.gates.values())
        )

    def validate(self, cnet: CodedNetwork, shared_wires: bool, faulty_gates: bool):
        net = cnet.original
        for (layer, neuron), pattern in self.synapses.items():
            if not 0 <= layer < net.depth or not 0 <= neuron < len(net.layers[layer]):
                raise DomainError(f"fault plan names missing neuron ({layer}, {neuron})")
            _check_pattern(pattern, cnet.reading_width(layer), f"neuron ({layer}, {neuron})")
            if self.max_cost is not None and pattern.cost > self.max_cost:
                raise DomainError(
                    f"neuron ({layer}, {neuron}) gets noise of cost {pattern.cost} > {self.max_cost}"
                )
        if self.wires and not shared_wires:
            raise DomainError("fault plan has shared-wire faults but shared-wire mode is off")
        for layer, pattern in self.wires.items():
            if not 0 <= layer < net.depth:
                raise DomainError(f"fault plan names missing wire layer {layer}")
            _check_pattern(pattern, cnet.reading_width(layer), f"wires of layer {layer}")
        if self.gates and not faulty_gates:
            raise DomainError("fault plan has parity gate faults but gates are ideal")
        for layer, pattern in self.gates.items():
            if layer not in cnet.gate_layers:
                raise DomainError(f"layer {layer} has no parity gate")
            _check_pattern(pattern, len(net.layers[layer]), f"parity gate of layer {layer}")


def _check_pattern(pattern: NoisePattern, width: int, where: str):
    try:
        pattern.check(width)
    except DimensionError as e:
        raise DomainError(f"{where}: {e}") from e


class LayerDistance(NamedTuple):
    layer: int
    m: int
    d: Fraction
    relative: Fraction


def code_network(net: LayeredNetwork, scheme: str = "parity") -> CodedNetwork:
    """
    scheme "identity" keeps the network uncoded (no parity wires) so the
    same fault machinery can measure the baseline.
    """
    if scheme not in SCHEMES:
        raise DomainError(f"unknown coding scheme '{scheme}', expected one of {SCHEMES}")
    build = parity_solution if scheme == "parity" else identity_solution
    solutions = tuple(tuple(build(nr) for nr in layer) for layer in net.layers)
    return CodedNetwork(net, scheme, solutions)


def _apply(pattern: NoisePattern | None, values: Wires) -> Wires:
    if pattern is None or pattern.is_empty:
        return values
    return tuple(
        0 if j in pattern.erasures else -y if j in pattern.errors else y
        for j, y in enumerate(values)
    )


def _parity_gate(outputs: Wires, pattern: NoisePattern | None) -> int:
    return prod(_apply(pattern, outputs))


def inject_and_forward(
    cnet: CodedNetwork,
    x: SignVector,
    plan: FaultPlan | None = None,
    shared_wires: bool | None = None,
    faulty_gates: bool | None = None,
) -> SignVector:
    """
    Forward pass with each neuron's pre-activation perturbed by its noise
    pattern: an erased synapse contributes 0, an errored one the negated
    term. Parity gates read the actual (possibly wrong) outputs of their layer.
    """
    shared_wires = settings.shared_wire_faults if shared_wires is None else shared_wires
    faulty_gates = settings.faulty_parity_gates if faulty_gates is None else faulty_gates
    plan = plan or FaultPlan()
    plan.validate(cnet, shared_wires, faulty_gates)
    check_length(cnet.original.input_width, x.n, "network input")

    wires: Wires = x.entries + ((prod(x.entries),) if cnet.has_parity else ())
    outputs: Wires = ()
    for layer, solutions in enumerate(cnet.solutions):
        wires = _apply(plan.wires.get(layer), wires)
        outputs = tuple(
            sign(
                sum(
                    (vj * yj for vj, yj in zip(sol.v, _apply(plan.synapses.get((layer, j)), wires)) if yj),
                    Fraction(0),
                )
                - sol.mu
            )
            for j, sol in enumerate(solutions)
        )
        if layer in cnet.gate_layers:
            wires = outputs + (_parity_gate(outputs, plan.gates.get(layer)),)
        else:
            wires = outputs
    return SignVector.from_signs(outputs)


def coded_forward(cnet: CodedNetwork, x: SignVector) -> SignVector:
    return inject_and_forward(cnet, x, FaultPlan())


def clean_forward(cnet: CodedNetwork, x: SignVector) -> SignVector:
    return forward(cnet.original, x)


def joint_layer_distance(net: LayeredNetwork) -> list[LayerDistance]:
    """Per layer, the worst minimum distance of the shared parity code over all its neurons."""
    result = []
    for i, layer in enumerate(net.layers):
        encoder = ParityEncoder(net.widths[i])
        pairs = [(sol.v, sol.mu) for sol in (parity_solution(nr) for nr in layer)]
        d = joint_min_distance(encoder, pairs)
        result.append(LayerDistance(i, encoder.m, d, d / encoder.m))
    return result


def neuron_input_widths(cnet: CodedNetwork) -> Sequence[tuple[int, int, int]]:
    """(layer, neuron, coded input width) for every neuron, in order."""
    return [
        (i, j, cnet.reading_width(i))
        for i, layer in enumerate(cnet.original.layers)
        for j in range(len(layer))
    ]
