import random

import pytest

from cohesion import karate_graph, toy_graph
from cohesion.graph import Graph, from_label_edges


@pytest.fixture(scope="session")
def toy() -> Graph:
    return toy_graph()


@pytest.fixture(scope="session")
def karate() -> Graph:
    return karate_graph()


def ids(g: Graph, labels) -> set[int]:
    return {g.id_of(str(x)) for x in labels}


def labs(g: Graph, group) -> set[int]:
    return {int(g.label(v)) for v in group}


def group_sets(g: Graph, result) -> list[set[int]]:
    """Result groups as sets of integer labels."""
    return [labs(g, grp) for grp in result.groups]


def gnp(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi graph; every node registered even when isolated."""
    pairs = [(str(v), str(v)) for v in range(n)]  # registers isolated nodes
    pairs += [(str(u), str(v)) for u in range(n) for v in range(u + 1, n)
              if rng.random() < p]
    return from_label_edges(pairs)


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """200 random graphs of up to 50 nodes (reduction/containment suites)."""
    rng = random.Random(20230817)
    return [gnp(rng, rng.randint(2, 50), rng.uniform(0.02, 0.5))
            for _ in range(200)]


@pytest.fixture(scope="session")
def tiny_corpus() -> list[Graph]:
    """100 random graphs of up to 10 nodes (brute-force oracle suites)."""
    rng = random.Random(977)
    return [gnp(rng, rng.randint(2, 10), rng.uniform(0.1, 0.8))
            for _ in range(100)]
