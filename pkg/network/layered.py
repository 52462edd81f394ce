from dataclasses import dataclass
from typing import Iterable, Sequence

from core.boolean import SignVector
from core.errors import DimensionError, DomainError, check_length
from core.neuron import BinaryNeuron, Neuron, canonicalize_bias, evaluate


@dataclass(frozen=True)
class LayeredNetwork:
    """Fully connected layers of binary neurons; layer i reads layer i-1."""

    input_width: int
    layers: tuple[tuple[BinaryNeuron, ...], ...]

    def __post_init__(self):
        if self.input_width < 1:
            raise DimensionError("input width must be positive")
        if not self.layers:
            raise DomainError("network needs at least one layer")
        width = self.input_width
        for i, layer in enumerate(self.layers):
            if not layer:
                raise DomainError(f"layer {i} is empty")
            for j, nr in enumerate(layer):
                if not isinstance(nr, BinaryNeuron):
                    raise DomainError(f"neuron {j} of layer {i} is not a canonical binary neuron")
                if nr.n != width:
                    raise DimensionError(
                        f"neuron {j} of layer {i} reads {nr.n} inputs, previous width is {width}"
                    )
            width = len(layer)

    @classmethod
    def of(cls, input_width: int, layers: Iterable[Iterable[Neuron]]) -> "LayeredNetwork":
        """Accepts any binary neurons and canonicalizes their biases."""
        built = []
        for i, layer in enumerate(layers):
            row = []
            for j, nr in enumerate(layer):
                if not nr.is_binary:
                    raise DomainError(f"neuron {j} of layer {i} has non-binary weights {nr.w}")
                row.append(canonicalize_bias(nr))
            built.append(tuple(row))
        return cls(input_width, tuple(built))

    @property
    def widths(self) -> tuple[int, ...]:
        return (self.input_width,) + tuple(len(layer) for layer in self.layers)

    @property
    def depth(self) -> int:
        return len(self.layers)

    def neurons(self) -> Iterable[tuple[int, int, BinaryNeuron]]:
        for i, layer in enumerate(self.layers):
            for j, nr in enumerate(layer):
                yield i, j, nr


def layer_outputs(layer: Sequence[Neuron], y: SignVector) -> SignVector:
    return SignVector.from_signs(evaluate(nr, y) for nr in layer)


def forward_trace(net: LayeredNetwork, x: SignVector) -> list[SignVector]:
    check_length(net.input_width, x.n, "network input")
    outputs = [x]
    for layer in net.layers:
        outputs.append(layer_outputs(layer, outputs[-1]))
    return outputs


def forward(net: LayeredNetwork, x: SignVector) -> SignVector:
    return forward_trace(net, x)[-1]
