"""
The definitional robustness oracle: every input against every noise
pattern, in a fixed order, so the first failure found is reproducible.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from loguru import logger

from core.boolean import hypercube_order
from core.errors import DomainError, ResourceError
from core.neuron import Neuron, evaluate
from core.processors import Chunk, first_hit, split_range
from core.settings import settings
from robustness.noise import NoisePattern, Witness, cost_split, count_patterns
from solutions.solution_types import Solution


@dataclass
class Verdict:
    robust: bool
    witness: Witness | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.robust


@dataclass
class RadiusResult:
    radius: int
    witnesses: list[Witness] = field(default_factory=list)
    checked: int = 0


def _check_budget(sol: Solution, splits: list[tuple[int, int]], budget: int | None) -> int:
    budget = budget or settings.budget
    total = sum(count_patterns(sol.m, t, s) for t, s in splits) << sol.n
    if total > budget:
        raise ResourceError(
            f"{total} (input, pattern) pairs for m={sol.m}, n={sol.n} exceed the budget {budget}"
        )
    return total


def _first_failure(sol: Solution, nr: Neuron, t: int, s: int, chunk: Chunk) -> Witness | None:
    v, mu = sol.integer_form()
    m = sol.m
    for index in range(chunk.start, chunk.stop):
        x = hypercube_order(index, sol.n)
        target = evaluate(nr, x)
        terms = [vj * zj for vj, zj in zip(v, sol.encode(x))]
        base = sum(terms) - mu
        for erased in combinations(range(m), t):
            value = base - sum(terms[j] for j in erased)
            rest = [j for j in range(m) if j not in erased]
            for errored in combinations(rest, s):
                noisy = value - 2 * sum(terms[j] for j in errored)
                if (1 if noisy >= 0 else -1) != target:
                    return Witness(x, NoisePattern(frozenset(erased), frozenset(errored)))
    return None


def _ts_verdict(sol: Solution, nr: Neuron, t: int, s: int, workers: int | None) -> Witness | None:
    chunks = split_range(1 << sol.n)
    return first_hit(lambda chunk: _first_failure(sol, nr, t, s, chunk), chunks, workers)


def _validate(sol: Solution, nr: Neuron, *counts: int):
    if sol.n != nr.n:
        raise DomainError(f"solution codes {sol.n} inputs but the neuron has {nr.n}")
    if any(c < 0 for c in counts):
        raise DomainError(f"noise counts must be nonnegative, got {counts}")


def is_ts_robust(
    sol: Solution,
    nr: Neuron,
    t: int,
    s: int,
    budget: int | None = None,
    workers: int | None = None,
) -> Verdict:
    """
    Correct output on every input under every t erasures and s errors.
    On failure carries the first witness: inputs in enumeration order,
    then erasure sets, then error sets, lexicographically.
    """
    _validate(sol, nr, t, s)
    if t + s > sol.m:
        return Verdict(True, None, 0)
    checked = _check_budget(sol, [(t, s)], budget)
    witness = _ts_verdict(sol, nr, t, s, workers)
    return Verdict(witness is None, witness, checked)


def _splits_up_to(r: int, m: int) -> Iterator[tuple[int, int]]:
    for cost in range(r + 1):
        for t, s in cost_split(cost):
            if t + s <= m:
                yield t, s


def is_r_robust(
    sol: Solution,
    nr: Neuron,
    r: int,
    budget: int | None = None,
    workers: int | None = None,
) -> Verdict:
    """(t, s)-robust for every t + 2s <= r, checked by increasing cost."""
    _validate(sol, nr, r)
    splits = list(_splits_up_to(r, sol.m))
    checked = _check_budget(sol, splits, budget)
    for t, s in splits:
        witness = _ts_verdict(sol, nr, t, s, workers)
        if witness is not None:
            return Verdict(False, witness, checked)
    return Verdict(True, None, checked)


def robustness_radius_detail(
    sol: Solution,
    nr: Neuron,
    budget: int | None = None,
    workers: int | None = None,
) -> RadiusResult:
    """
    Largest r (at most m) with r-robustness, plus the first witness of
    every (t, s) failing at cost r + 1.
    """
    _validate(sol, nr)
    checked = 0
    for cost in range(sol.m + 1):
        splits = [(t, s) for t, s in cost_split(cost) if t + s <= sol.m]
        checked += _check_budget(sol, splits, budget)
        witnesses = [
            w for w in (_ts_verdict(sol, nr, t, s, workers) for t, s in splits) if w is not None
        ]
        if witnesses:
            radius = cost - 1
            logger.debug(f"{sol.kind} solution fails at cost {cost}: {witnesses[0]}")
            if radius < 0:
                logger.warning(f"{sol.kind} solution disagrees with the neuron without noise")
                radius = 0
            return RadiusResult(radius, witnesses, checked)
    return RadiusResult(sol.m, [], checked)


def robustness_radius(
    sol: Solution,
    nr: Neuron,
    budget: int | None = None,
    workers: int | None = None,
) -> int:
    return robustness_radius_detail(sol, nr, budget, workers).radius
