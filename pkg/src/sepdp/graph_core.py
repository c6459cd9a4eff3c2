"""Graph representation and distance primitives.

Vertex sets are plain Python ints used as bitmasks: bit ``v`` is set iff
vertex ``v`` belongs to the set. Ints are immutable, hash exactly, and
give union/intersection/complement as single operators, which is what
every DP table key in this package needs.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator

VertexSet = int

MAX_VERTICES = 1024
INF = math.inf


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: VertexSet) -> list[int]:
    return list(iter_bits(mask))


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex {v}")
        mask |= 1 << v
    return mask


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def lowest(mask: VertexSet) -> int:
    """Smallest member of a nonempty set."""
    return (mask & -mask).bit_length() - 1


def canonical_key(mask: VertexSet) -> tuple[int, ...]:
    """Sort key giving the canonical (lexicographic on members) order."""
    return tuple(iter_bits(mask))


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``. Instances are treated
    as immutable; the all-pairs distance table is computed lazily once.
    """

    __slots__ = ("n", "adj", "_dist")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for n={n}")
        if n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._dist: list[list[float]] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def all(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, mask: VertexSet) -> VertexSet:
        """Open neighbourhood N(U) = (union of N(u)) minus U."""
        out = 0
        adj = self.adj
        m = mask
        while m:
            low = m & -m
            out |= adj[low.bit_length() - 1]
            m ^= low
        return out & ~mask

    def closed_neighbors(self, mask: VertexSet) -> VertexSet:
        return self.neighbors(mask) | mask

    def is_clique(self, mask: VertexSet) -> bool:
        adj = self.adj
        return all((mask & ~adj[v]) == 1 << v for v in iter_bits(mask))

    def is_connected_set(self, mask: VertexSet) -> bool:
        """True iff G[mask] is connected (the empty set counts as connected)."""
        if not mask:
            return True
        return reach(self, lowest(mask), mask) == mask

    def induced(self, mask: VertexSet) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` plus the old labels."""
        old = members(mask)
        index = {v: i for i, v in enumerate(old)}
        adj = [vset(index[u] for u in iter_bits(self.adj[v] & mask)) for v in old]
        return Graph(len(old), adj), old

    def relabel(self, order: list[int]) -> Graph:
        """Graph whose vertex ``i`` is ``order[i]`` of this graph."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = [vset(pos[u] for u in iter_bits(self.adj[v])) for v in order]
        return Graph(self.n, adj)

    def distances(self) -> list[list[float]]:
        """All-pairs BFS distances, memoised (``inf`` across components)."""
        if self._dist is None:
            self._dist = [_bfs_row(self, s) for s in range(self.n)]
        return self._dist

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValueError(f"invalid vertex {v!r} for graph on {self.n} vertices")

    def check_set(self, mask: VertexSet) -> None:
        if mask < 0 or mask & ~self.all:
            raise ValueError("vertex set is not a subset of the vertex range")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def _bfs_row(g: Graph, source: int) -> list[float]:
    row = [INF] * g.n
    row[source] = 0
    seen = 1 << source
    frontier = seen
    depth = 0
    while frontier:
        depth += 1
        frontier = g.neighbors(frontier) & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            row[v] = depth
    return row


def reach(g: Graph, start: int, within: VertexSet) -> VertexSet:
    """Vertices of ``within`` reachable from ``start`` inside G[within]."""
    return reach_with_boundary(g, start, within)[0]


def reach_with_boundary(g: Graph, start: int, within: VertexSet) -> tuple[VertexSet, VertexSet]:
    """Component of ``start`` in G[within] and its open neighbourhood in G."""
    comp = 1 << start
    frontier = comp
    touched = 0
    adj = g.adj
    while frontier:
        nb = 0
        while frontier:
            low = frontier & -frontier
            nb |= adj[low.bit_length() - 1]
            frontier ^= low
        touched |= nb
        frontier = nb & within & ~comp
        comp |= frontier
    return comp, touched & ~comp


def distance(g: Graph, u: int, v: int) -> float:
    g.check_vertex(u)
    g.check_vertex(v)
    return g.distances()[u][v]


def neighborhood_k(g: Graph, mask: VertexSet, k: int, closed: bool = True) -> VertexSet:
    """Vertices within distance ``k`` of ``mask``; the open form drops ``mask``."""
    g.check_set(mask)
    if k < 0:
        raise ValueError("k must be nonnegative")
    ball = mask
    frontier = mask
    for _ in range(k):
        frontier = g.neighbors(frontier) & ~ball
        if not frontier:
            break
        ball |= frontier
    return ball if closed else ball & ~mask


def components(g: Graph, removed: VertexSet = 0) -> list[VertexSet]:
    """Connected components of G - removed, ordered by smallest member."""
    return components_within(g, g.all & ~removed)


def components_with_boundary(g: Graph, within: VertexSet) -> list[tuple[VertexSet, VertexSet]]:
    """(component, N(component)) pairs for the components of G[within]."""
    out = []
    while within:
        pair = reach_with_boundary(g, (within & -within).bit_length() - 1, within)
        out.append(pair)
        within &= ~pair[0]
    return out


def components_within(g: Graph, within: VertexSet) -> list[VertexSet]:
    """Connected components of G[within]."""
    out = []
    while within:
        comp = reach(g, lowest(within), within)
        out.append(comp)
        within &= ~comp
    return out


def power(g: Graph, k: int) -> Graph:
    """The k-th power: uv is an edge iff 1 <= dist(u, v) <= k."""
    if k < 1:
        raise ValueError("graph power requires k >= 1")
    if k == 1:
        return g
    adj = [neighborhood_k(g, 1 << v, k, closed=False) for v in range(g.n)]
    return Graph(g.n, adj)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, [right if v < a else left for v in range(a + b)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def random_graph(n: int, p: float, rng) -> Graph:
    """G(n, p) using a ``random.Random``-like generator."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng) -> Graph:
    """Random spanning tree plus G(n, p) edges, so always connected."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))
