import random
from collections import Counter
from fractions import Fraction
from itertools import combinations, product
from math import lcm, prod
from typing import Callable, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel

from core.boolean import hypercube_order
from core.errors import DomainError, ResourceError
from core.processors import Chunk, map_chunks, split_range
from core.settings import settings
from core.utils import rational_to_str, to_rational
from network.coded import CodedNetwork, FaultPlan, clean_forward, inject_and_forward, neuron_input_widths
from robustness.noise import NoisePattern

MC_CSV_HEADER = ["trial_config", "trials", "agreements", "accuracy", "seed"]


class FaultWitness(BaseModel):
    x: List[int]
    erasures: Dict[str, List[int]]  # "layer:neuron" -> erased synapses
    expected: List[int]
    got: List[int]


class FaultCheckReport(BaseModel):
    scheme: str
    erasures_per_neuron: int
    inputs: int
    plans: int
    checked: int
    passed: int
    failed: int
    witness: Optional[FaultWitness] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def accuracy(self) -> Fraction:
        return Fraction(self.passed, self.checked) if self.checked else Fraction(1)


class MonteCarloReport(BaseModel):
    trial_config: str
    trials: int
    agreements: int
    accuracy: str
    seed: int
    histograms: Dict[int, Dict[int, int]]  # layer -> faults in layer -> trials

    def csv_row(self) -> list[str]:
        return [self.trial_config, str(self.trials), str(self.agreements), self.accuracy, str(self.seed)]


class SimulationReport(BaseModel):
    check: FaultCheckReport
    monte_carlo: Optional[MonteCarloReport] = None


def _erasure_options(width: int, limit: int) -> list[frozenset[int]]:
    return [
        frozenset(erased)
        for k in range(min(limit, width) + 1)
        for erased in combinations(range(width), k)
    ]


def exhaustive_single_fault_check(
    cnet: CodedNetwork,
    erasures_per_neuron: int = 1,
    overrides: Dict[tuple[int, int], int] | None = None,
    budget: int | None = None,
    workers: int | None = None,
) -> FaultCheckReport:
    """
    Every input against every plan with at most erasures_per_neuron erased
    synapses per coded neuron (overrides raise or lower that limit for
    single neurons). Counts agreements with the clean network and keeps
    the first disagreement in (input, plan) order.
    """
    overrides = overrides or {}
    limits = [erasures_per_neuron, *overrides.values()]
    if any(limit < 0 for limit in limits):
        raise DomainError(f"erasures per neuron must be nonnegative, got {limits}")
    sites = neuron_input_widths(cnet)
    options = [
        _erasure_options(width, overrides.get((i, j), erasures_per_neuron)) for i, j, width in sites
    ]
    plans = prod(len(o) for o in options)
    inputs = 1 << cnet.original.input_width
    total = inputs * plans
    budget = budget or settings.budget
    if total > budget:
        raise ResourceError(f"{total} (input, plan) pairs exceed the budget {budget}")

    def run(chunk: Chunk) -> tuple[int, Optional[FaultWitness]]:
        passed, witness = 0, None
        for index in range(chunk.start, chunk.stop):
            x = hypercube_order(index, cnet.original.input_width)
            expected = clean_forward(cnet, x)
            for choice in product(*options):
                plan = FaultPlan(
                    synapses={
                        (i, j): NoisePattern(erased)
                        for (i, j, _), erased in zip(sites, choice)
                        if erased
                    }
                )
                got = inject_and_forward(cnet, x, plan, shared_wires=False, faulty_gates=False)
                if got == expected:
                    passed += 1
                elif witness is None:
                    witness = FaultWitness(
                        x=list(x.entries),
                        erasures={f"{i}:{j}": sorted(e) for (i, j), e in _named(sites, choice)},
                        expected=list(expected.entries),
                        got=list(got.entries),
                    )
        return passed, witness

    results = map_chunks(run, split_range(inputs), workers)
    passed = sum(p for p, _ in results)
    witness = next((w for _, w in results if w is not None), None)
    report = FaultCheckReport(
        scheme=cnet.scheme,
        erasures_per_neuron=erasures_per_neuron,
        inputs=inputs,
        plans=plans,
        checked=total,
        passed=passed,
        failed=total - passed,
        witness=witness,
    )
    logger.info(f"Fault check ({cnet.scheme}): {report.passed}/{report.checked} agree")
    return report


def _named(sites, choice):
    return [((i, j), erased) for (i, j, _), erased in zip(sites, choice) if erased]


def _sample_pattern(rng: random.Random, width: int, scale: int, erase: int, error: int) -> NoisePattern:
    erased, errored = [], []
    for j in range(width):
        u = rng.randrange(scale)
        if u < erase:
            erased.append(j)
        elif u < erase + error:
            errored.append(j)
    return NoisePattern(frozenset(erased), frozenset(errored))


def monte_carlo_fault_sim(
    cnet: CodedNetwork,
    erasure_prob,
    error_prob,
    trials: int,
    seed: int,
    shared_wires: bool | None = None,
    faulty_gates: bool | None = None,
    workers: int | None = None,
    progress: Callable[[int], None] | None = None,
) -> MonteCarloReport:
    """
    Random input and random independent faults per trial; every coded
    synapse is erased, in error or clean. Trial k draws from its own
    generator seeded by (seed, k), so results do not depend on scheduling.
    """
    try:
        erasure_prob, error_prob = to_rational(erasure_prob), to_rational(error_prob)
    except ValueError as e:
        raise DomainError(f"fault probability: {e}") from e
    if not (0 <= erasure_prob <= 1 and 0 <= error_prob <= 1 and erasure_prob + error_prob <= 1):
        raise DomainError(
            f"fault probabilities must lie in [0, 1] and sum to at most 1, got "
            f"{erasure_prob} and {error_prob}"
        )
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    shared_wires = settings.shared_wire_faults if shared_wires is None else shared_wires
    faulty_gates = settings.faulty_parity_gates if faulty_gates is None else faulty_gates

    scale = lcm(erasure_prob.denominator, error_prob.denominator)
    erase = int(erasure_prob * scale)
    error = int(error_prob * scale)
    net = cnet.original
    sites = neuron_input_widths(cnet)

    def run(chunk: Chunk) -> tuple[int, list[Counter]]:
        agreements = 0
        counts = [Counter() for _ in range(net.depth)]
        for trial in range(chunk.start, chunk.stop):
            rng = random.Random(f"{seed}:{trial}")
            x = hypercube_order(rng.randrange(1 << net.input_width), net.input_width)
            if shared_wires:
                synapses = {}
                wires = {
                    layer: _sample_pattern(rng, cnet.reading_width(layer), scale, erase, error)
                    for layer in range(net.depth)
                }
            else:
                synapses = {
                    (i, j): _sample_pattern(rng, width, scale, erase, error) for i, j, width in sites
                }
                wires = {}
            gates = {
                layer: _sample_pattern(rng, len(net.layers[layer]), scale, erase, error)
                for layer in cnet.gate_layers
            } if faulty_gates else {}
            plan = FaultPlan(synapses=synapses, wires=wires, gates=gates)
            got = inject_and_forward(cnet, x, plan, shared_wires, faulty_gates)
            agreements += got == clean_forward(cnet, x)

            per_layer = Counter()
            for (i, _), p in synapses.items():
                per_layer[i] += p.t + p.s
            for i, p in wires.items():
                per_layer[i] += p.t + p.s
            for i, p in gates.items():
                per_layer[i] += p.t + p.s
            for i in range(net.depth):
                counts[i][per_layer[i]] += 1
        return agreements, counts

    results = map_chunks(run, split_range(trials), workers, progress)
    agreements = sum(a for a, _ in results)
    histograms = {i: Counter() for i in range(net.depth)}
    for _, counts in results:
        for i, counter in enumerate(counts):
            histograms[i].update(counter)

    config = (
        f"scheme={cnet.scheme};erasure={rational_to_str(erasure_prob)};"
        f"error={rational_to_str(error_prob)};shared_wires={shared_wires};faulty_gates={faulty_gates}"
    )
    report = MonteCarloReport(
        trial_config=config,
        trials=trials,
        agreements=agreements,
        accuracy=rational_to_str(Fraction(agreements, trials)),
        seed=seed,
        histograms={i: dict(sorted(h.items())) for i, h in histograms.items()},
    )
    logger.info(f"Monte Carlo {config}: accuracy {report.accuracy} over {trials} trials")
    return report
