import random

import pytest
from hypothesis import HealthCheck, settings

from homext.atlas import corpus_upto
from homext.graphs import FiniteGraph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> FiniteGraph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return FiniteGraph.from_edges(n, edges)


@pytest.fixture(scope="session")
def corpus4():
    return corpus_upto(4)


@pytest.fixture(scope="session")
def corpus5():
    return corpus_upto(5)


@pytest.fixture(scope="session")
def corpus6():
    return corpus_upto(6)
