import random

import pytest

from sepdp.graph_core import Graph, random_graph


def labelled(edges: str) -> Graph:
    """Edges like ``"ab bc cd"``; vertex ``a`` is 0, ``b`` is 1, ..."""
    pairs = [(ord(e[0]) - 97, ord(e[1]) - 97) for e in edges.split()]
    n = 1 + max(max(p) for p in pairs)
    return Graph.from_edges(n, pairs)


def S(letters: str) -> int:
    return sum(1 << (ord(c) - 97) for c in letters)


def random_graphs(count: int, max_n: int, seed: int, min_n: int = 1):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        yield random_graph(n, rng.choice([0.15, 0.3, 0.5, 0.7]), rng)


@pytest.fixture
def rng():
    return random.Random(12345)


def connected_arc_instances(count: int, n_range, seed: int):
    """Connected circular-arc graphs with their models; disconnected draws are skipped."""
    from sepdp.graph_classes import graph_from_arc_model, is_connected_graph, random_arc_model

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        model = random_arc_model(rng.randint(*n_range), rng.uniform(0.25, 0.7), rng.randrange(10**9))
        g = graph_from_arc_model(model)
        if is_connected_graph(g):
            out.append((model, g))
    return out


def connected_chordal_instances(count: int, n_range, seed: int):
    from sepdp.graph_classes import random_chordal

    rng = random.Random(seed)
    return [
        random_chordal(rng.randint(*n_range), rng.uniform(0.1, 0.6), rng.randrange(10**9))
        for _ in range(count)
    ]
