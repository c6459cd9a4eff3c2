"""Chordal and circular-arc graphs: recognition, generators, clique partitions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph_core import Graph, VertexSet, iter_bits, lowest, popcount, reach

CliquePartition = list[VertexSet]


def maximum_cardinality_search(g: Graph) -> list[int]:
    """MCS visiting order; its reverse is a perfect elimination order iff chordal."""
    weight = [0] * g.n
    unvisited = g.all
    order = []
    while unvisited:
        v = max(iter_bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in iter_bits(g.adj[v] & unvisited):
            weight[u] += 1
    return order


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    later = g.all
    for v in order:
        later &= ~(1 << v)
        if not g.is_clique(g.adj[v] & later):
            return False
    return True


def chordless_cycle(g: Graph) -> list[int] | None:
    """An induced cycle on at least four vertices, or None if there is none."""
    for v in range(g.n):
        nb = g.adj[v]
        for a in iter_bits(nb):
            for b in iter_bits(nb & ~g.adj[a]):
                if b <= a:
                    continue
                # shortest a-b path avoiding v and its other neighbours
                allowed = g.all & ~(nb | 1 << v) | 1 << a | 1 << b
                path = _shortest_path(g, a, b, allowed)
                if path is not None:
                    return [v] + path
    return None


def _shortest_path(g: Graph, s: int, t: int, allowed: VertexSet) -> list[int] | None:
    parent = {s: s}
    frontier = [s]
    while frontier:
        nxt = []
        for x in frontier:
            for y in iter_bits(g.adj[x] & allowed):
                if y not in parent:
                    parent[y] = x
                    if y == t:
                        path = [t]
                        while path[-1] != s:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    nxt.append(y)
        frontier = nxt
    return None


def is_chordal(g: Graph) -> tuple[bool, list[int]]:
    """(True, perfect elimination order) or (False, chordless cycle)."""
    peo = maximum_cardinality_search(g)[::-1]
    if is_perfect_elimination_order(g, peo):
        return True, peo
    cycle = chordless_cycle(g)
    assert cycle is not None and len(cycle) >= 4
    return False, cycle


def maximal_cliques_chordal(g: Graph, peo: list[int]) -> list[VertexSet]:
    later = g.all
    cands = []
    for v in peo:
        later &= ~(1 << v)
        cands.append(g.adj[v] & later | 1 << v)
    return [c for c in cands if not any(c != d and c & d == c for d in cands)]


def random_chordal(n: int, density: float, seed: int) -> Graph:
    """Chordal graph grown by attaching each new vertex to a clique.

    The new vertex picks an anchor ``u`` and joins ``u`` plus a random
    clique inside ``N(u)`` (each candidate kept with probability
    ``density``). Every vertex is simplicial when added, so the reversed
    insertion order is a perfect elimination order. ``density=1`` yields
    K_n, ``density=0`` a random tree.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    adj = [0] * n
    for v in range(1, n):
        u = rng.randrange(v)
        clique = 1 << u
        cand = list(iter_bits(adj[u]))
        rng.shuffle(cand)
        for w in cand:
            if adj[w] & clique == clique and rng.random() < density:
                clique |= 1 << w
        for w in iter_bits(clique):
            adj[w] |= 1 << v
        adj[v] = clique
    return Graph(n, adj)


@dataclass(frozen=True)
class ArcModel:
    """Arcs on a circle with ``2n`` endpoint slots ``0..2n-1``.

    Arc ``v`` runs clockwise from ``arcs[v][0]`` to ``arcs[v][1]``. Scanpoint
    ``i`` sits between slots ``i`` and ``i+1`` (mod ``2n``).
    """

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        slots = 2 * len(self.arcs)
        ends = [e for arc in self.arcs for e in arc]
        if any(not (0 <= e < slots) for e in ends):
            raise ValueError(f"arc endpoints must lie in 0..{slots - 1}")
        if len(set(ends)) != len(ends):
            raise ValueError("arc endpoints must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def slots(self) -> int:
        return 2 * self.n

    def _offset(self, v: int, p: float) -> float:
        start = self.arcs[v][0]
        return (p - start) % self.slots

    def _length(self, v: int) -> int:
        start, end = self.arcs[v]
        return (end - start) % self.slots

    def contains_slot(self, v: int, slot: int) -> bool:
        return self._offset(v, slot) <= self._length(v)

    def scanpoint_cover(self, i: int) -> VertexSet:
        """Arcs passing through scanpoint ``i`` (between slots i and i+1)."""
        return sum(
            1 << v for v in range(self.n) if self._offset(v, i + 0.5) < self._length(v)
        )

    def scanpoint_covers(self) -> list[VertexSet]:
        return [self.scanpoint_cover(i) for i in range(self.slots)]

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs]}

    @classmethod
    def from_json(cls, data: dict) -> ArcModel:
        arcs = tuple((int(s), int(e)) for s, e in data["arcs"])
        if "n" in data and int(data["n"]) != len(arcs):
            raise ValueError(f"model declares n={data['n']} but lists {len(arcs)} arcs")
        return cls(arcs)

    def rotated(self, shift: int) -> ArcModel:
        m = self.slots
        return ArcModel(tuple(((s + shift) % m, (e + shift) % m) for s, e in self.arcs))


def graph_from_arc_model(model: ArcModel) -> Graph:
    """Intersection graph: arcs meet iff one contains the other's start."""
    n = model.n
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if model.contains_slot(u, model.arcs[v][0]) or model.contains_slot(v, model.arcs[u][0]):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def random_arc_model(n: int, coverage: float, seed: int) -> ArcModel:
    """Random arcs; arc lengths are uniform up to ``coverage`` of the circle."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    coverage = min(max(coverage, 0.0), 0.95)
    raw = []
    for v in range(n):
        start = rng.random()
        length = rng.uniform(0.0, coverage) + 1e-9
        raw.append((start, (start + length) % 1.0, v))
    points = sorted(
        [(s, v, 0) for s, _, v in raw] + [(e, v, 1) for _, e, v in raw]
    )
    arcs = [[0, 0] for _ in range(n)]
    for slot, (_, v, which) in enumerate(points):
        arcs[v][which] = slot
    return ArcModel(tuple((s, e) for s, e in arcs))


class ModelWitnessError(ValueError):
    pass


def _cover_search(model: ArcModel, target: VertexSet, max_points: int) -> CliquePartition | None:
    covers = sorted(
        {c for c in model.scanpoint_covers() if c and c & target == c},
        key=lambda c: -popcount(c),
    )
    if not target:
        return []
    for r in range(1, max_points + 1):
        for combo in combinations(covers, r):
            union = 0
            for c in combo:
                union |= c
            if union == target:
                parts = []
                taken = 0
                for c in combo:
                    part = c & ~taken
                    if part:
                        parts.append(part)
                    taken |= c
                return parts
    return None


def separator_clique_partition(model: ArcModel, sep: VertexSet) -> CliquePartition:
    """Split a minimal separator into at most two scanpoint cliques."""
    parts = _cover_search(model, sep, 2)
    if parts is None:
        raise ModelWitnessError("model does not witness separator")
    return parts


def pmc_clique_partition(model: ArcModel, omega: VertexSet) -> CliquePartition:
    """Split a potential maximal clique into at most three scanpoint cliques."""
    parts = _cover_search(model, omega, 3)
    if parts is None:
        raise ModelWitnessError("model does not witness potential maximal clique")
    return parts


def greedy_clique_partition(g: Graph, target: VertexSet) -> CliquePartition:
    """Greedy cover of ``target`` by cliques of G; no width guarantee."""
    parts = []
    rest = target
    while rest:
        v = lowest(rest)
        clique = 1 << v
        for u in iter_bits(g.adj[v] & rest):
            if g.adj[u] & clique == clique:
                clique |= 1 << u
        parts.append(clique)
        rest &= ~clique
    return parts


def is_connected_graph(g: Graph) -> bool:
    return g.n == 0 or reach(g, 0, g.all) == g.all
