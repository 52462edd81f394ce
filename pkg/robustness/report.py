from time import perf_counter
from typing import List, Optional

from loguru import logger
from pydantic import BaseModel

from core.boolean import SignVector
from core.neuron import Neuron, evaluate
from core.utils import rational_to_str
from robustness.distance import min_distance
from robustness.noise import NoisePattern, Witness, noisy_value
from robustness.oracle import robustness_radius_detail
from solutions.bounds import expected_relative_distance
from solutions.solution_types import Solution

CSV_HEADER = ["kind", "m", "d", "relative", "radius", "witnesses", "checked_patterns", "wall_time"]


class WitnessModel(BaseModel):
    x: List[int]
    erasures: List[int]
    errors: List[int]

    @classmethod
    def from_witness(cls, witness: Witness) -> "WitnessModel":
        return cls(
            x=list(witness.x.entries),
            erasures=sorted(witness.pattern.erasures),
            errors=sorted(witness.pattern.errors),
        )


class RobustnessReport(BaseModel):
    kind: str
    m: int
    d: str
    relative: str
    radius: int
    witnesses: List[WitnessModel]
    checked_patterns: int
    wall_time: float
    expected_relative: Optional[str] = None

    def csv_row(self) -> list[str]:
        return [
            self.kind,
            str(self.m),
            self.d,
            self.relative,
            str(self.radius),
            str(len(self.witnesses)),
            str(self.checked_patterns),
            f"{self.wall_time:.6f}",
        ]


def build_report(
    sol: Solution,
    nr: Neuron,
    budget: int | None = None,
    workers: int | None = None,
) -> RobustnessReport:
    started_at = perf_counter()
    d = min_distance(sol)
    radius = robustness_radius_detail(sol, nr, budget, workers)
    elapsed = perf_counter() - started_at
    expected = expected_relative_distance(sol)
    logger.info(
        f"{sol.kind}: m={sol.m}, d={rational_to_str(d)}, radius={radius.radius} in {elapsed:.2f}s"
    )
    return RobustnessReport(
        kind=sol.kind,
        m=sol.m,
        d=rational_to_str(d),
        relative=rational_to_str(d / sol.m),
        radius=radius.radius,
        witnesses=[WitnessModel.from_witness(w) for w in radius.witnesses],
        checked_patterns=radius.checked,
        wall_time=elapsed,
        expected_relative=rational_to_str(expected),
    )


class ErasureRow(BaseModel):
    coded: List[int]
    erased: int
    terms: List[str]
    value: str
    output: int
    expected: int


def erasure_table(sol: Solution, nr: Neuron, x: SignVector) -> list[ErasureRow]:
    """The coded neuron's output on x under each single erasure."""
    z = sol.encode(x)
    rows = []
    for j in range(sol.m):
        pattern = NoisePattern.of(erasures=[j])
        noisy = pattern.apply(z)
        value = noisy_value(sol, x, pattern)
        rows.append(
            ErasureRow(
                coded=list(z.entries),
                erased=j,
                terms=[rational_to_str(c * y) for c, y in zip(sol.v, noisy.entries)],
                value=rational_to_str(value),
                output=1 if value >= 0 else -1,
                expected=evaluate(nr, x),
            )
        )
    return rows
