from typing import Any, Dict, List, Union

from pydantic import BaseModel, field_validator

from core.utils import rational_to_str, to_rational


def _rational_field(value: Any, field: str) -> str:
    # keeps the text form; parsing happens once more when the domain object is built
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValueError(f"{field} must be an exact rational string, got {value!r}")
    try:
        return rational_to_str(to_rational(value))
    except ValueError:
        raise ValueError(f"{field} must be 'p/q' or a plain decimal, got {value!r}")


class NeuronRecord(BaseModel):
    weights: List[str]
    bias: str

    @field_validator("weights", mode="before")
    @classmethod
    def check_weights(cls, value):
        if not isinstance(value, list) or not value:
            raise ValueError("weights must be a nonempty array")
        return [_rational_field(c, f"weights[{i}]") for i, c in enumerate(value)]

    @field_validator("bias", mode="before")
    @classmethod
    def check_bias(cls, value):
        return _rational_field(value, "bias")


class NetworkRecord(BaseModel):
    input_width: int
    layers: List[List[NeuronRecord]]


class SolutionRecord(BaseModel):
    kind: str
    parameters: Dict[str, Any]
    v: List[str]
    mu: str

    @field_validator("v", mode="before")
    @classmethod
    def check_v(cls, value):
        if not isinstance(value, list) or not value:
            raise ValueError("v must be a nonempty array")
        return [_rational_field(c, f"v[{i}]") for i, c in enumerate(value)]

    @field_validator("mu", mode="before")
    @classmethod
    def check_mu(cls, value):
        return _rational_field(value, "mu")


class LayerDistanceModel(BaseModel):
    layer: int
    m: int
    d: str
    relative: str


class AnalysisModel(BaseModel):
    n: int
    weights: List[str]
    bias: str
    canonical_bias: Union[str, None]
    delta: str
    binary: bool
    integer: bool
    constant: bool
    spectrum_top: List[Dict[str, Any]]


class VerifyModel(BaseModel):
    kind: str
    r: int
    m: int
    oracle_robust: bool
    criterion_robust: bool
    agree: bool
    witness: Union[Dict[str, List[int]], None] = None
    solution: Union[SolutionRecord, None] = None


class DistanceModel(BaseModel):
    kind: str
    m: int
    d: str
    relative: str
    expected_relative: Union[str, None] = None
