import threading
from fractions import Fraction

import pytest

from conftest import random_binary_neuron
from core.boolean import SignVector, enumerate_hypercube
from core.errors import DimensionError, DomainError, ResourceError
from core.neuron import Neuron
from network.coded import (
    FaultPlan,
    LayerDistance,
    code_network,
    coded_forward,
    inject_and_forward,
    joint_layer_distance,
)
from network.layered import LayeredNetwork, forward, forward_trace
from network.simulation import exhaustive_single_fault_check, monte_carlo_fault_sim
from robustness.noise import NoisePattern


def sv(*entries):
    return SignVector.from_signs(entries)


@pytest.fixture
def network() -> LayeredNetwork:
    """3 -> 3 -> 1, every neuron non-constant."""
    return LayeredNetwork.of(
        3,
        [
            [Neuron.of([1, 1, 1], 0), Neuron.of([1, -1, 1], 0), Neuron.of([-1, 1, 1], 2)],
            [Neuron.of([1, 1, 1], 0)],
        ],
    )


@pytest.fixture
def majority_network() -> LayeredNetwork:
    return LayeredNetwork.of(3, [[Neuron.of([1, 1, 1], 0)]])


def random_network(rng, widths):
    layers = [
        [random_binary_neuron(rng, widths[i]) for _ in range(widths[i + 1])]
        for i in range(len(widths) - 1)
    ]
    return LayeredNetwork.of(widths[0], layers)


class TestLayeredNetwork:
    def test_forward(self, network):
        assert forward(network, sv(1, 1, 1)) == sv(1)
        assert forward(network, sv(-1, -1, -1)) == sv(-1)
        assert forward_trace(network, sv(1, 1, 1))[1] == sv(1, 1, -1)

    def test_canonicalizes_biases(self):
        net = LayeredNetwork.of(3, [[Neuron.of([1, 1, 1], "1/2")]])
        assert net.layers[0][0].theta == 0

    def test_rejects_non_binary(self):
        with pytest.raises(DomainError):
            LayeredNetwork.of(2, [[Neuron.of([2, 1], 0)]])

    def test_rejects_width_mismatch(self):
        with pytest.raises(DimensionError):
            LayeredNetwork.of(3, [[Neuron.of([1, 1], 1)]])

    def test_input_length(self, network):
        with pytest.raises(DimensionError):
            forward(network, sv(1, 1))


class TestCodedNetwork:
    def test_widths(self, network):
        cnet = code_network(network)
        assert [sol.m for layer in cnet.solutions for sol in layer] == [4, 4, 4, 4]
        assert list(cnet.gate_layers) == [0]

    def test_identity_scheme_has_no_parity(self, network):
        cnet = code_network(network, "identity")
        assert [sol.m for layer in cnet.solutions for sol in layer] == [3, 3, 3, 3]
        assert not list(cnet.gate_layers)

    def test_unknown_scheme(self, network):
        with pytest.raises(DomainError):
            code_network(network, "hamming")

    @pytest.mark.parametrize("scheme", ["parity", "identity"])
    def test_fault_free_equivalence(self, rng, scheme):
        for widths in ([3, 3, 1], [4, 2, 3, 2], [2, 5, 1]):
            net = random_network(rng, widths)
            cnet = code_network(net, scheme)
            for x in enumerate_hypercube(net.input_width):
                assert coded_forward(cnet, x) == forward(net, x)

    def test_joint_layer_distance(self, network):
        assert joint_layer_distance(network) == [
            LayerDistance(0, 4, Fraction(2), Fraction(1, 2)),
            LayerDistance(1, 4, Fraction(2), Fraction(1, 2)),
        ]


class TestFaultPlan:
    def test_missing_neuron(self, network):
        plan = FaultPlan(synapses={(0, 5): NoisePattern.of([0])})
        with pytest.raises(DomainError):
            inject_and_forward(code_network(network), sv(1, 1, 1), plan)

    def test_index_out_of_range(self, network):
        plan = FaultPlan(synapses={(0, 0): NoisePattern.of([4])})
        with pytest.raises(DomainError):
            inject_and_forward(code_network(network), sv(1, 1, 1), plan)

    def test_cost_limit(self, network):
        plan = FaultPlan(synapses={(1, 0): NoisePattern.of(errors=[0])}, max_cost=1)
        with pytest.raises(DomainError):
            inject_and_forward(code_network(network), sv(1, 1, 1), plan)

    def test_modes_must_be_enabled(self, network):
        cnet = code_network(network)
        with pytest.raises(DomainError):
            inject_and_forward(cnet, sv(1, 1, 1), FaultPlan(wires={0: NoisePattern.of([0])}), shared_wires=False)
        with pytest.raises(DomainError):
            inject_and_forward(cnet, sv(1, 1, 1), FaultPlan(gates={0: NoisePattern.of([0])}), faulty_gates=False)

    def test_last_layer_has_no_gate(self, network):
        plan = FaultPlan(gates={1: NoisePattern.of([0])})
        with pytest.raises(DomainError):
            inject_and_forward(code_network(network), sv(1, 1, 1), plan, faulty_gates=True)

    def test_empty(self):
        assert FaultPlan().is_empty
        assert FaultPlan(synapses={(0, 0): NoisePattern()}).is_empty
        assert not FaultPlan(gates={0: NoisePattern.of([1])}).is_empty


class TestInjection:
    def test_shared_wire_erasure_is_tolerated(self, network):
        cnet = code_network(network)
        for j in range(4):
            plan = FaultPlan(wires={0: NoisePattern.of([j])})
            for x in enumerate_hypercube(3):
                assert inject_and_forward(cnet, x, plan, shared_wires=True) == forward(network, x)

    def test_erased_gate_reading_is_tolerated(self, network):
        # a zero gate reading acts as one erased synapse in every reader
        cnet = code_network(network)
        plan = FaultPlan(gates={0: NoisePattern.of([1])})
        for x in enumerate_hypercube(3):
            assert inject_and_forward(cnet, x, plan, faulty_gates=True) == forward(network, x)

    def test_uncoded_erasure_flips_the_output(self, majority_network):
        cnet = code_network(majority_network, "identity")
        plan = FaultPlan(synapses={(0, 0): NoisePattern.of([0])})
        assert inject_and_forward(cnet, sv(-1, -1, 1), plan) == sv(1)


class TestExhaustiveCheck:
    def test_parity_survives_single_erasures(self, network):
        report = exhaustive_single_fault_check(code_network(network))
        assert report.ok
        assert report.plans == 5**4
        assert report.checked == 8 * 5**4
        assert report.accuracy == 1
        assert report.witness is None

    def test_identity_fails(self, majority_network):
        report = exhaustive_single_fault_check(code_network(majority_network, "identity"))
        assert not report.ok
        assert report.witness is not None
        assert report.witness.expected != report.witness.got

    def test_two_erasures_on_one_neuron(self, majority_network):
        report = exhaustive_single_fault_check(code_network(majority_network), overrides={(0, 0): 2})
        assert report.failed > 0
        assert len(report.witness.erasures["0:0"]) == 2

    def test_worker_count_does_not_matter(self, majority_network, small_chunks):
        cnet = code_network(majority_network, "identity")
        assert exhaustive_single_fault_check(cnet, workers=1) == exhaustive_single_fault_check(cnet, workers=3)

    def test_budget(self, network):
        with pytest.raises(ResourceError):
            exhaustive_single_fault_check(code_network(network), budget=100)

    @pytest.mark.parametrize("limits", [{"erasures_per_neuron": -1}, {"overrides": {(0, 0): -1}}])
    def test_negative_erasure_limit(self, majority_network, limits):
        with pytest.raises(DomainError):
            exhaustive_single_fault_check(code_network(majority_network, "identity"), **limits)


class TestMonteCarlo:
    def test_no_faults(self, network):
        report = monte_carlo_fault_sim(code_network(network), "0", "0", 50, seed=7)
        assert report.accuracy == "1"
        assert report.agreements == 50
        assert report.histograms == {0: {0: 50}, 1: {0: 50}}

    def test_reproducible(self, network):
        cnet = code_network(network)
        first = monte_carlo_fault_sim(cnet, "1/10", "1/20", 200, seed=3)
        assert first == monte_carlo_fault_sim(cnet, "1/10", "1/20", 200, seed=3)
        assert first.csv_row()[1:] == ["200", str(first.agreements), first.accuracy, "3"]

    def test_workers_do_not_change_results(self, network, small_chunks):
        cnet = code_network(network)
        sequential = monte_carlo_fault_sim(cnet, "1/5", "0", 40, seed=1, workers=1)
        assert sequential == monte_carlo_fault_sim(cnet, "1/5", "0", 40, seed=1, workers=4)

    def test_progress_callback(self, network, small_chunks):
        seen = []
        monte_carlo_fault_sim(code_network(network), "0", "0", 9, seed=0, progress=seen.append)
        assert sum(seen) == 9

    def test_progress_runs_on_the_calling_thread(self, network, small_chunks):
        threads, sizes = set(), []

        def progress(size):
            threads.add(threading.get_ident())
            sizes.append(size)

        monte_carlo_fault_sim(code_network(network), "1/10", "0", 30, seed=2, workers=4, progress=progress)
        assert threads == {threading.get_ident()}
        assert sum(sizes) == 30

    def test_fault_modes_in_config(self, network):
        report = monte_carlo_fault_sim(
            code_network(network), "1/4", "0", 20, seed=0, shared_wires=True, faulty_gates=True
        )
        assert "shared_wires=True" in report.trial_config
        assert "faulty_gates=True" in report.trial_config

    @pytest.mark.parametrize(
        "erasure, error", [("3/2", "0"), ("-1/4", "0"), ("2/3", "1/2"), ("abc", "0"), ("0", 0.1)]
    )
    def test_invalid_probabilities(self, network, erasure, error):
        with pytest.raises(DomainError):
            monte_carlo_fault_sim(code_network(network), erasure, error, 10, seed=0)

    def test_trials_must_be_positive(self, network):
        with pytest.raises(DomainError):
            monte_carlo_fault_sim(code_network(network), "0", "0", 0, seed=0)
