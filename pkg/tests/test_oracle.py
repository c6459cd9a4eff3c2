import pytest

from sepdp.graph_core import INF, complete_graph, cycle_graph, path_graph
from sepdp.oracle import (
    brute_pmcs,
    brute_solve,
    brute_solve_with_witness,
    is_forest,
    is_independent,
    treewidth_exact,
)

from conftest import random_graphs


def test_treewidth_small_families():
    assert treewidth_exact(path_graph(6)) == 1
    assert treewidth_exact(cycle_graph(6)) == 2
    assert treewidth_exact(complete_graph(5)) == 4


def test_pmc_methods_agree():
    for g in random_graphs(80, 7, seed=11):
        assert brute_pmcs(g, "filter") == brute_pmcs(g, "orderings")


def test_problems_on_c5():
    g = cycle_graph(5)
    assert brute_solve(g, "mis") == 2
    assert brute_solve(g, "mif") == 4
    assert brute_solve(g, "cvc") == 4
    assert brute_solve(g, "cfvs") == 1
    assert brute_solve(g, "dist-is", d=2) == 2


def test_witness_is_feasible():
    size, w = brute_solve_with_witness(cycle_graph(7), "mis")
    assert is_independent(cycle_graph(7), w) and size == 3
    size, w = brute_solve_with_witness(cycle_graph(7), "mif")
    assert is_forest(cycle_graph(7), w) and size == 6


def test_red_blue_infeasible():
    from sepdp.graph_core import Graph

    g = Graph.from_edges(2, [])
    assert brute_solve(g, "red-blue", reds=1, blues=2) == INF


def test_size_guard():
    with pytest.raises(ValueError):
        brute_solve(path_graph(30), "mis")


def test_unknown_problem():
    with pytest.raises(ValueError):
        brute_solve(path_graph(3), "nope")
