"""Conversion between records (JSON files) and domain objects."""

import json
from pathlib import Path
from typing import Any, Type, TypeVar

from pydantic import BaseModel, ValidationError

from core.errors import CodingError, RecordError
from core.neuron import Neuron
from core.utils import rational_to_str
from network.layered import LayeredNetwork
from records.schemas import NetworkRecord, NeuronRecord, SolutionRecord
from solutions.encoders import (
    ConstantEncoder,
    GeneralizedParityEncoder,
    IdentityEncoder,
    ParityEncoder,
    PuncturedHadamardEncoder,
    ReplicationEncoder,
)
from solutions.solution_types import Encoder, Solution

M = TypeVar("M", bound=BaseModel)


def _validated(model: Type[M], data: Any, where: str) -> M:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(p) for p in error["loc"]) or where
        raise RecordError(f"{where}.{field}" if field != where else where, error["msg"]) from e


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise RecordError(str(path), f"invalid JSON: {e}") from e
    except OSError as e:
        raise RecordError(str(path), f"cannot read: {e.strerror}") from e


def dump_json(record: BaseModel, path: str | Path | None = None) -> str:
    text = record.model_dump_json(indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


# neurons
def neuron_from_record(record: NeuronRecord) -> Neuron:
    return Neuron(tuple(record.weights), record.bias)


def neuron_to_record(nr: Neuron) -> NeuronRecord:
    return NeuronRecord(weights=[rational_to_str(c) for c in nr.w], bias=rational_to_str(nr.theta))


def parse_neuron(data: Any) -> Neuron:
    return neuron_from_record(_validated(NeuronRecord, data, "neuron"))


def load_neuron(path: str | Path) -> Neuron:
    return parse_neuron(load_json(path))


# networks
def network_from_record(record: NetworkRecord) -> LayeredNetwork:
    layers = [[neuron_from_record(r) for r in layer] for layer in record.layers]
    try:
        return LayeredNetwork.of(record.input_width, layers)
    except CodingError as e:
        raise RecordError("network.layers", str(e)) from e


def network_to_record(net: LayeredNetwork) -> NetworkRecord:
    return NetworkRecord(
        input_width=net.input_width,
        layers=[[neuron_to_record(nr) for nr in layer] for layer in net.layers],
    )


def parse_network(data: Any) -> LayeredNetwork:
    return network_from_record(_validated(NetworkRecord, data, "network"))


def load_network(path: str | Path) -> LayeredNetwork:
    return parse_network(load_json(path))


# solutions
def _encoder_from(kind: str, parameters: dict[str, Any]) -> Encoder:
    try:
        if kind == "identity":
            return IdentityEncoder(int(parameters["n"]))
        if kind == "parity":
            return ParityEncoder(int(parameters["n"]))
        if kind == "fourier":
            return PuncturedHadamardEncoder(int(parameters["n"]))
        if kind == "gen-parity":
            return GeneralizedParityEncoder(tuple(int(c) for c in parameters["weights"]))
        if kind == "replication":
            inner = parameters["inner"]
            return ReplicationEncoder(_encoder_from(inner["kind"], inner["parameters"]), int(parameters["ell"]))
        if kind == "constant":
            target = Neuron(tuple(parameters["weights"]), parameters["bias"])
            return ConstantEncoder(target, int(parameters["m"]))
    except (KeyError, TypeError, ValueError) as e:
        raise RecordError("solution.parameters", f"bad parameters for '{kind}': {e}") from e
    raise RecordError("solution.kind", f"unknown kind '{kind}'")


def solution_to_record(sol: Solution) -> SolutionRecord:
    return SolutionRecord(
        kind=sol.kind,
        parameters=sol.encoder.parameters(),
        v=[rational_to_str(c) for c in sol.v],
        mu=rational_to_str(sol.mu),
    )


def solution_from_record(record: SolutionRecord) -> Solution:
    encoder = _encoder_from(record.kind, record.parameters)
    try:
        return Solution(encoder, tuple(record.v), record.mu)
    except CodingError as e:
        raise RecordError("solution.v", str(e)) from e


def parse_solution(data: Any) -> Solution:
    return solution_from_record(_validated(SolutionRecord, data, "solution"))


def load_solution(path: str | Path) -> Solution:
    return parse_solution(load_json(path))
