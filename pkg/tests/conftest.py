import random
from itertools import product

import pytest
from hypothesis import strategies as st

from core.boolean import SignVector
from core.neuron import BinaryNeuron, Neuron, canonical_bias, is_constant
from core.settings import settings


def sign_vectors(n: int):
    return st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n).map(SignVector.from_signs)


def canonical_biases(n: int) -> list[int]:
    return list(range(-n - 1, n + 2, 2))


def all_binary_neurons(n: int):
    """Every +-1 weight vector with every canonical bias."""
    for w in product([1, -1], repeat=n):
        for theta in canonical_biases(n):
            yield BinaryNeuron.of(w, theta)


def random_binary_neuron(rng: random.Random, n: int, non_constant: bool = False) -> BinaryNeuron:
    while True:
        w = [rng.choice([1, -1]) for _ in range(n)]
        bn = BinaryNeuron.of(w, rng.choice(canonical_biases(n)))
        if not non_constant or not is_constant(bn):
            return bn


def random_integer_neuron(rng: random.Random, n: int, max_span: int) -> Neuron:
    """Integer weights with l1 norm in [1, max_span] and a canonical bias."""
    while True:
        w = [rng.randint(-3, 3) for _ in range(n)]
        span = sum(abs(c) for c in w)
        if 1 <= span <= max_span:
            break
    theta = canonical_bias(rng.randint(-span - 2, span + 2), span)
    return Neuron.of(w, theta)


@pytest.fixture
def example_neuron() -> BinaryNeuron:
    """w = (1, 1, -1), theta = 0."""
    return BinaryNeuron.of([1, 1, -1], 0)


@pytest.fixture
def majority3() -> BinaryNeuron:
    return BinaryNeuron.of([1, 1, 1], 0)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)


@pytest.fixture
def small_chunks(monkeypatch):
    """Several chunks even for tiny hypercubes, so chunk ordering is exercised."""
    monkeypatch.setattr(settings, "chunk_size", 2)
