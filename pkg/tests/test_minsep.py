import random

import pytest

from sepdp.errors import PreconditionError, SeparatorBudgetExceeded
from sepdp.graph_core import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    power,
    random_connected_graph,
)
from sepdp.minsep import (
    enumerate_minimal_separators,
    is_ab_minimal_separator,
    is_minimal_separator,
    theorem1_map,
    theorem1_trace,
    verify_power_theorem,
)
from sepdp.oracle import brute_minimal_separators

from conftest import S, labelled, random_graphs


def test_p4_separators():
    g = labelled("ab bc cd")
    assert set(enumerate_minimal_separators(g)) == {S("b"), S("c")}


def test_star_has_centre_only():
    g = labelled("ab ac ad ae")
    assert list(enumerate_minimal_separators(g)) == [S("a")]


@pytest.mark.parametrize("k", range(1, 8))
def test_families_closed_forms(k):
    assert len(enumerate_minimal_separators(complete_graph(k))) == 0
    assert len(enumerate_minimal_separators(path_graph(k))) == max(k - 2, 0)
    if k >= 4:
        # C_k: pairs of non-adjacent vertices
        assert len(enumerate_minimal_separators(cycle_graph(k))) == k * (k - 3) // 2


def test_complete_bipartite_separators():
    g = complete_bipartite(2, 3)
    assert set(enumerate_minimal_separators(g)) == {0b00011, 0b11100}


def test_disconnected_graph_has_empty_separator():
    assert 0 in enumerate_minimal_separators(empty_graph(3))
    assert 0 not in enumerate_minimal_separators(path_graph(3))


def test_ab_separator_recognition():
    g = labelled("ab bc cd")
    assert is_ab_minimal_separator(g, S("b"), 0, 3)
    assert not is_ab_minimal_separator(g, S("bc"), 0, 3)
    assert is_minimal_separator(g, S("c"))


def test_budget():
    with pytest.raises(SeparatorBudgetExceeded):
        enumerate_minimal_separators(cycle_graph(8), max_seps=5)


def test_matches_oracle_random():
    for g in random_graphs(120, 9, seed=3):
        assert enumerate_minimal_separators(g).as_set() == brute_minimal_separators(g)


def test_c8_cube():
    report = verify_power_theorem(cycle_graph(8), 3)
    assert (report.separators_power, report.separators_g) == (4, 20)
    assert report.holds


def test_map_rejects_even_k():
    with pytest.raises(PreconditionError):
        theorem1_map(cycle_graph(8), 2, 0b10001)


def test_balls_are_far_apart_and_map_is_exact():
    rng = random.Random(8)
    for _ in range(60):
        g = random_connected_graph(rng.randint(4, 14), rng.choice([0.1, 0.2, 0.3]), rng)
        for k in (3, 5):
            gk = power(g, k)
            for sbar in enumerate_minimal_separators(gk):
                tr = theorem1_trace(g, k, sbar, gk=gk)
                dist = g.distances()
                for u in range(g.n):
                    for v in range(g.n):
                        if tr.ball_a >> u & 1 and tr.ball_b >> v & 1:
                            assert dist[u][v] >= 2
                assert tr.comp_a & tr.comp_b == 0


def test_threads_same_result():
    g = cycle_graph(10)
    a = verify_power_theorem(g, 3)
    b = verify_power_theorem(g, 3, threads=3)
    assert a.witness == b.witness
