from fractions import Fraction

import pytest

from conftest import all_binary_neurons, random_binary_neuron, random_integer_neuron
from core.boolean import SignVector, enumerate_hypercube
from core.errors import DegenerateError, DomainError, ResourceError
from core.neuron import BinaryNeuron, Neuron, canonicalize_integer_bias, delta, evaluate, is_constant, spectrum
from robustness.distance import min_distance, relative_distance
from solutions import build_solution, builders, comparison_kinds, parse_kind
from solutions.bounds import beats_replication, expected_relative_distance, fourier_distance
from solutions.constant import constant_solution
from solutions.encoders import (
    GeneralizedParityEncoder,
    IdentityEncoder,
    ParityEncoder,
    PuncturedHadamardEncoder,
    ReplicationEncoder,
    encode,
)
from solutions.fourier import fourier_solution
from solutions.identity import identity_solution
from solutions.parity import generalized_parity_solution, parity_solution
from solutions.replication import replicate, replication_solution
from solutions.solution_types import Solution, coded_evaluate


def sv(*entries):
    return SignVector.from_signs(entries)


def agrees(sol: Solution, nr: Neuron) -> bool:
    return all(coded_evaluate(sol, x) == evaluate(nr, x) for x in enumerate_hypercube(nr.n))


class TestEncoders:
    def test_parity(self):
        assert encode(ParityEncoder(3), sv(1, -1, 1)) == sv(1, -1, 1, -1)
        assert ParityEncoder(3).m == 4

    def test_punctured_hadamard(self):
        assert encode(PuncturedHadamardEncoder(2), sv(1, -1)) == sv(1, -1, -1)
        assert PuncturedHadamardEncoder(4).m == 15

    def test_generalized_parity(self):
        e = GeneralizedParityEncoder((2, -1))
        assert e.m == 4
        assert encode(e, sv(-1, 1)) == sv(-1, -1, 1, 1)

    def test_generalized_parity_skips_zero_weights(self):
        e = GeneralizedParityEncoder((3, 0, 1))
        assert e.m == 5
        # x_1 three times, x_3 once, then x_1 x_3
        assert encode(e, sv(-1, -1, 1)) == sv(-1, -1, -1, 1, -1)

    def test_replication(self):
        e = ReplicationEncoder(ParityEncoder(2), 3)
        assert e.m == 9
        assert encode(e, sv(1, -1)) == sv(1, -1, -1, 1, -1, -1, 1, -1, -1)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            encode(IdentityEncoder(3), sv(1, 1))
        with pytest.raises(ValueError):
            encode(ParityEncoder(3), sv(1, 1))


class TestSolution:
    def test_length_must_match(self):
        with pytest.raises(ValueError):
            Solution(ParityEncoder(2), (1, 1), 0)

    def test_all_zero_weights(self):
        with pytest.raises(DegenerateError):
            Solution(IdentityEncoder(2), (0, 0), 0)

    def test_integer_form(self):
        sol = Solution(IdentityEncoder(2), ("1/2", "-1/3"), "1/4")
        assert sol.integer_form() == ((6, -4), 3)


class TestIdentity:
    def test_examples(self, majority3, example_neuron):
        assert identity_solution(majority3).v == (1, 1, 1)
        sol = identity_solution(example_neuron)
        assert (sol.v, sol.mu) == ((1, 1, -1), 0)
        assert identity_solution(Neuron.of([1], 0)).m == 1

    def test_agreement(self, rng):
        for _ in range(20):
            nr = random_integer_neuron(rng, 4, 9)
            assert agrees(identity_solution(nr), nr)


class TestConstant:
    def test_encoding(self, majority3):
        sol = constant_solution(majority3, 3)
        for x in enumerate_hypercube(3):
            expected = (1, 1, 1) if evaluate(majority3, x) == 1 else (-1, -1, -1)
            assert sol.encode(x).entries == expected
        assert (sol.v, sol.mu) == ((1, 1, 1), 0)
        assert agrees(sol, majority3)

    def test_positive_length(self, majority3):
        with pytest.raises(DomainError):
            constant_solution(majority3, 0)


class TestReplication:
    def test_one_copy_is_unchanged(self, majority3):
        sol = parity_solution(majority3)
        assert replicate(sol, 1) is sol

    def test_zero_copies(self, majority3):
        with pytest.raises(DomainError):
            replicate(identity_solution(majority3), 0)

    def test_identity_of_majority(self, majority3):
        sol = replication_solution(majority3, 2)
        assert sol.m == 6
        assert sol.mu == 0
        assert min_distance(sol) == 2

    def test_scaling(self, rng):
        for _ in range(50):
            n = rng.randint(1, 4)
            nr = canonicalize_integer_bias(random_integer_neuron(rng, n, 8))
            kind = rng.choice(["identity", "gen-parity"])
            sol, nr = build_solution(kind, nr)
            d = min_distance(sol)
            for ell in (2, 3, 5):
                replicated = replicate(sol, ell)
                assert replicated.m == ell * sol.m
                assert min_distance(replicated) == ell * d
                assert relative_distance(replicated) == relative_distance(sol)
                assert agrees(replicated, nr)


class TestParity:
    def test_example_neuron(self, example_neuron):
        sol = parity_solution(example_neuron)
        assert sol.v == (1, 1, -1, 1)
        assert sol.mu == 0
        assert coded_evaluate(sol, sv(1, -1, 1)) == -1

    def test_majority(self, majority3):
        sol = parity_solution(majority3)
        assert sol.v == (1, 1, 1, -1)
        assert agrees(sol, majority3)

    def test_requires_canonical_bias(self):
        with pytest.raises(DomainError):
            parity_solution(Neuron.of([1, 1, 1], 1))
        with pytest.raises(DomainError):
            parity_solution(Neuron.of([2, 1, 1], 0))

    def test_constant_neuron(self):
        for theta in (-4, 4):
            bn = BinaryNeuron.of([1, -1, 1], theta)
            sol = parity_solution(bn)
            assert agrees(sol, bn)
            assert min_distance(sol) >= 2

    def test_distance_exhaustive(self):
        for n in range(1, 7):
            for bn in all_binary_neurons(n):
                sol = parity_solution(bn)
                values = [abs(sol.coded_value(x)) for x in enumerate_hypercube(n)]
                assert min(values) >= 2
                assert agrees(sol, bn)
                if not is_constant(bn):
                    assert min(values) == 2
                    assert relative_distance(sol) == Fraction(2, n + 1)

    @pytest.mark.slow
    def test_distance_sampled(self, rng):
        for n in range(7, 11):
            for _ in range(1000):
                bn = random_binary_neuron(rng, n)
                sol = parity_solution(bn)
                d = min_distance(sol)
                if is_constant(bn):
                    assert d >= 2
                else:
                    assert d == 2
                    assert relative_distance(sol) == Fraction(2, n + 1)


class TestGeneralizedParity:
    def test_example(self):
        nr = Neuron.of([2, -1], 0)
        sol = generalized_parity_solution(nr)
        assert sol.v == (1, 1, -1, 1)
        assert sol.mu == 0
        for x in enumerate_hypercube(2):
            assert sol.coded_value(x) == 2 * x[0]
        assert min_distance(sol) == 2
        assert relative_distance(sol) == Fraction(1, 2)

    def test_zero_weight(self):
        original = Neuron.of([3, 0, 1], 2)
        sol, nr = build_solution("gen-parity", original)
        assert nr.theta == 1
        assert sol.m == 5
        assert agrees(sol, original)

    def test_reduces_to_parity(self):
        for n in range(1, 5):
            for bn in all_binary_neurons(n):
                assert generalized_parity_solution(bn).v == parity_solution(bn).v

    def test_errors(self):
        with pytest.raises(DomainError):
            generalized_parity_solution(Neuron.of(["1/2", 1], 0))
        with pytest.raises(DomainError):
            generalized_parity_solution(Neuron.of([2, -1], 1))
        with pytest.raises(DegenerateError):
            generalized_parity_solution(Neuron.of([0, 0], 1))

    def test_random_integer_neurons(self, rng):
        for _ in range(100):
            nr = random_integer_neuron(rng, rng.randint(1, 5), 10)
            span = sum(abs(c) for c in nr.integer_weights)
            sol = generalized_parity_solution(nr)
            assert sol.m == span + 1
            assert agrees(sol, nr)
            d = min_distance(sol)
            assert d >= 2
            if min(abs(nr.pre_activation(x)) for x in enumerate_hypercube(nr.n)) == 1:
                assert d == 2
                assert relative_distance(sol) == Fraction(2, span + 1)
            assert expected_relative_distance(sol) == Fraction(2, span + 1)


class TestFourier:
    def test_majority(self, majority3):
        sol = fourier_solution(majority3)
        assert sol.m == 7
        half = Fraction(1, 2)
        # masks 1..7: {0}, {1}, {0,1}, {2}, {0,2}, {1,2}, {0,1,2}
        assert sol.v == (half, half, 0, half, 0, 0, -half)
        assert sol.mu == 0
        assert min_distance(sol) == 2
        assert relative_distance(sol) == Fraction(2, 7)
        assert agrees(sol, majority3)
        assert expected_relative_distance(sol) == Fraction(2, 7)

    def test_coded_value_is_the_neuron(self, rng):
        for _ in range(20):
            nr = random_integer_neuron(rng, 3, 6)
            if is_constant(nr):
                continue
            sol = fourier_solution(nr)
            for x in enumerate_hypercube(3):
                assert sol.coded_value(x) == evaluate(nr, x)

    def test_dictator(self):
        sol = fourier_solution(Neuron.of([1, 0], 0))
        assert sol.v == (1, 0, 0)
        assert min_distance(sol) == 1

    def test_constant_is_degenerate(self):
        with pytest.raises(DegenerateError):
            fourier_solution(Neuron.of([1, 1], -3))

    def test_cap(self):
        with pytest.raises(ResourceError):
            fourier_solution(Neuron.of([1] * 5, 0), cap=4)

    def test_distance_is_inverse_spectral_norm(self, rng):
        for _ in range(200):
            n = rng.choice([2, 3, 4])
            nr = Neuron.of([Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)],
                           Fraction(rng.randint(-9, 9), 2))
            if is_constant(nr):
                continue
            sol = fourier_solution(nr)
            assert agrees(sol, nr)
            assert min_distance(sol) * spectrum(nr).sup_norm_nonempty() == 1
            assert min_distance(sol) == fourier_distance(nr)


class TestBounds:
    def test_expected_relative_distance(self, majority3):
        assert expected_relative_distance(parity_solution(majority3)) == Fraction(1, 2)
        assert expected_relative_distance(replicate(parity_solution(majority3), 3)) == Fraction(1, 2)
        assert expected_relative_distance(constant_solution(majority3, 4)) == 1
        assert expected_relative_distance(identity_solution(majority3)) is None

    def test_beats_replication(self):
        # delta = 1 and ||w||_1 = n for binary weights: n < 2n - 1 once n > 1
        assert beats_replication(Neuron.of([1, -1, 1], 0))
        assert not beats_replication(Neuron.of([1], 0))
        # w = (2, -1): delta = 1/2, 3 < 2*2/(1/2) - 1 = 7
        assert beats_replication(Neuron.of([2, -1], 0))


class TestRegistry:
    def test_all_kinds_registered(self):
        assert set(builders) == {"identity", "replication", "parity", "gen-parity", "fourier", "constant"}

    @pytest.mark.parametrize(
        "spec, parsed",
        [("parity", ("parity", None)), ("replication:2", ("replication", 2)), ("constant:5", ("constant", 5))],
    )
    def test_parse_kind(self, spec, parsed):
        assert parse_kind(spec) == parsed

    @pytest.mark.parametrize("spec", ["hamming", "replication", "replication:0", "constant:x", "parity:2"])
    def test_parse_kind_rejects(self, spec):
        with pytest.raises(DomainError):
            parse_kind(spec)

    def test_build_canonicalizes(self):
        sol, nr = build_solution("parity", Neuron.of([1, 1, 1], "0.5"))
        assert nr.theta == 0
        assert sol.v == (1, 1, 1, -1)

    def test_comparison_kinds(self):
        assert list(comparison_kinds(Neuron.of([1, -1], 0))) == [
            "identity", "replication:2", "parity", "gen-parity", "fourier", "constant:3",
        ]
        assert "parity" not in list(comparison_kinds(Neuron.of([2, -1], 0)))

    def test_agreement_for_every_kind(self, rng):
        for n in range(1, 5):
            for _ in range(5):
                bn = random_binary_neuron(rng, n, non_constant=True)
                for spec in comparison_kinds(bn):
                    sol, nr = build_solution(spec, bn)
                    assert agrees(sol, nr), spec
                    assert delta(nr) == 1
