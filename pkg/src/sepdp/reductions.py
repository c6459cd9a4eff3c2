"""Distance-d independent sets via graph powers, and the red-blue
dominating set to connected vertex cover construction."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import oracle
from .errors import PreconditionError, VerificationError
from .graph_core import Graph, VertexSet, iter_bits, popcount, power
from .minsep import enumerate_minimal_separators
from .dp_treewidth import solve_max_induced_tw


def distance_d_independent_set(
    g: Graph,
    d: int,
    max_seps: int | None = None,
    max_pmcs: int | None = None,
) -> tuple[int, VertexSet]:
    """Largest set of vertices at pairwise distance >= d, for even d >= 2.

    Solved as a maximum independent set of ``G^(d-1)``. Odd ``d >= 3`` is
    refused: the problem is NP-hard on chordal graphs there.
    """
    if d < 2:
        raise PreconditionError(f"d must be at least 2, got {d}")
    if d % 2:
        raise PreconditionError(
            f"odd d={d} is not supported: distance-d independent set is NP-hard "
            "on chordal graphs for every odd d >= 3"
        )
    gp = power(g, d - 1)
    size, F = solve_max_induced_tw(gp, 0, max_seps=max_seps, max_pmcs=max_pmcs)
    dist = g.distances()
    verts = list(iter_bits(F))
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if dist[u][v] < d:
                raise VerificationError(f"vertices {u} and {v} are at distance {dist[u][v]} < {d}")
    return size, F


@dataclass(frozen=True)
class BipartiteGraph:
    graph: Graph
    reds: VertexSet
    blues: VertexSet

    def __post_init__(self):
        g = self.graph
        if self.reds & self.blues:
            raise ValueError("red and blue sets overlap")
        if self.reds | self.blues != g.all:
            raise ValueError("red and blue sets must cover every vertex")
        for v in iter_bits(self.reds):
            if g.adj[v] & self.reds:
                raise ValueError(f"edge inside the red side at vertex {v}")
        for v in iter_bits(self.blues):
            if g.adj[v] & self.blues:
                raise ValueError(f"edge inside the blue side at vertex {v}")


@dataclass
class CVCInstance:
    """The graph G' plus the role of each of its vertices."""

    graph: Graph
    hub: int
    hub_pendant: int
    pendants: dict[int, int] = field(default_factory=dict)  # red vertex -> its pendant

    def roles(self) -> list[str]:
        out = ["blue"] * self.graph.n
        for r, p in self.pendants.items():
            out[r] = "red"
            out[p] = "pendant"
        out[self.hub] = "hub"
        out[self.hub_pendant] = "pendant"
        return out


def red_blue_to_cvc(b: BipartiteGraph) -> CVCInstance:
    """G' = G + hub adjacent to all blues + a pendant on every red and on the hub.

    Original vertices keep their labels; the hub is ``n``, red pendants
    follow in red order, the hub's pendant is last.
    """
    g = b.graph
    n = g.n
    reds = list(iter_bits(b.reds))
    hub = n
    pendants = {r: n + 1 + i for i, r in enumerate(reds)}
    hub_pendant = n + 1 + len(reds)
    edges = list(g.edges())
    edges += [(v, hub) for v in iter_bits(b.blues)]
    edges += [(r, p) for r, p in pendants.items()]
    edges.append((hub, hub_pendant))
    return CVCInstance(Graph.from_edges(hub_pendant + 1, edges), hub, hub_pendant, pendants)


@dataclass
class AppendixLemmaReport:
    separators_g: int
    separators_g_prime: int
    vertices_g_prime: int

    @property
    def holds(self) -> bool:
        return self.separators_g_prime <= self.separators_g + self.vertices_g_prime


def verify_appendix_lemma(b: BipartiteGraph, max_seps: int | None = None) -> AppendixLemmaReport:
    """Check |Delta(G')| <= |Delta(G)| + |V(G')|; raises if it fails."""
    inst = red_blue_to_cvc(b)
    report = AppendixLemmaReport(
        len(enumerate_minimal_separators(b.graph, max_seps)),
        len(enumerate_minimal_separators(inst.graph, max_seps)),
        inst.graph.n,
    )
    if not report.holds:
        raise VerificationError(
            f"|Delta(G')|={report.separators_g_prime} exceeds "
            f"|Delta(G)|={report.separators_g} + |V(G')|={report.vertices_g_prime}"
        )
    return report


MAX_CORRESPONDENCE_N = 16


def solution_correspondence_check(b: BipartiteGraph, k: int) -> bool:
    """Brute-force both sides: red-blue domination within k <=> CVC of G' within k+|R|+1."""
    inst = red_blue_to_cvc(b)
    if inst.graph.n > MAX_CORRESPONDENCE_N:
        raise ValueError(f"G' has {inst.graph.n} vertices, above {MAX_CORRESPONDENCE_N}")
    rb = oracle.brute_solve(b.graph, "red-blue", reds=b.reds, blues=b.blues)
    cvc = oracle.brute_solve(inst.graph, "cvc")
    bound = k + popcount(b.reds) + 1
    return (rb <= k) == (cvc <= bound)


def random_bipartite(n_red: int, n_blue: int, p: float, seed: int) -> BipartiteGraph:
    """Reds are ``0..n_red-1``, blues follow; each cross pair is an edge with probability p."""
    rng = random.Random(seed)
    n = n_red + n_blue
    edges = [(r, n_red + j) for r in range(n_red) for j in range(n_blue) if rng.random() < p]
    reds = (1 << n_red) - 1
    return BipartiteGraph(Graph.from_edges(n, edges), reds, ((1 << n) - 1) & ~reds)

