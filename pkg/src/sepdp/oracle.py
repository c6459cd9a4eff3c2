"""Exhaustive baselines for small graphs.

Everything here is definition-direct and shares nothing with the solvers
beyond the primitives of :mod:`sepdp.graph_core`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph_core import INF, Graph, VertexSet, components, iter_bits, popcount, vset

MAX_SUBSET_N = 16
MAX_ORDERING_N = 8
MAX_FILTER_PMC_N = 14
MAX_TW_CHECK = 15


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ValueError(f"{what} oracle limited to n <= {limit}, got {n}")


def _full_count(g: Graph, s: VertexSet) -> int:
    return sum(1 for c in components(g, s) if g.neighbors(c) == s)


def brute_minimal_separators(g: Graph) -> frozenset[VertexSet]:
    _guard(g.n, MAX_SUBSET_N, "separator")
    return frozenset(s for s in range(1 << g.n) if _full_count(g, s) >= 2)


def _is_pmc_by_definition(g: Graph, omega: VertexSet) -> bool:
    comps = components(g, omega)
    nbhds = [g.neighbors(c) for c in comps]
    if any(nb == omega for nb in nbhds):
        return False
    verts = list(iter_bits(omega))
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if g.has_edge(u, v):
                continue
            if not any(nb >> u & 1 and nb >> v & 1 for nb in nbhds):
                return False
    return True


def pmcs_by_filter(g: Graph) -> frozenset[VertexSet]:
    _guard(g.n, MAX_FILTER_PMC_N, "PMC filter")
    return frozenset(o for o in range(1, 1 << g.n) if _is_pmc_by_definition(g, o))


def minimal_triangulations(g: Graph) -> list[tuple[int, ...]]:
    """Edge-adjacency rows of every minimal triangulation of ``g``.

    Runs the elimination game over all orderings; the fill produced after
    eliminating a set X depends only on X, so orderings are explored as
    (eliminated set, accumulated adjacency) states with deduplication.
    """
    _guard(g.n, MAX_ORDERING_N, "ordering")
    n = g.n
    states = {(0, tuple(g.adj))}
    for _ in range(n):
        nxt = set()
        for done, rows in states:
            # current elimination graph: G restricted to non-eliminated vertices plus fill
            for v in range(n):
                if done >> v & 1:
                    continue
                nb = _elim_neighbors(g, done, v)
                new_rows = list(rows)
                for u in iter_bits(nb):
                    new_rows[u] |= nb & ~(1 << u)
                nxt.add((done | 1 << v, tuple(new_rows)))
        states = nxt
    triangs = {rows for _, rows in states}
    edge_sets = {rows: _edge_mask(rows) for rows in triangs}
    minimal = []
    for rows, es in edge_sets.items():
        if not any(other != es and other & es == other for other in edge_sets.values()):
            minimal.append(rows)
    return sorted(minimal)


@lru_cache(maxsize=None)
def _elim_cached(adj: tuple[int, ...], done: VertexSet, v: int) -> VertexSet:
    # vertices outside done reachable from v through done
    seen = 1 << v
    frontier = seen
    out = 0
    while frontier:
        nb = 0
        for x in iter_bits(frontier):
            nb |= adj[x]
        nb &= ~seen
        seen |= nb
        out |= nb & ~done
        frontier = nb & done
    return out


def _elim_neighbors(g: Graph, done: VertexSet, v: int) -> VertexSet:
    return _elim_cached(g.adj, done, v)


def _edge_mask(rows: tuple[int, ...]) -> int:
    n = len(rows)
    mask = 0
    for u in range(n):
        for v in iter_bits(rows[u]):
            if u < v:
                mask |= 1 << (u * n + v)
    return mask


def _maximal_cliques_brute(rows: tuple[int, ...]) -> set[VertexSet]:
    n = len(rows)
    cliques = [
        s for s in range(1, 1 << n)
        if all((s & ~rows[v]) == 1 << v for v in iter_bits(s))
    ]
    cset = set(cliques)
    return {
        s for s in cliques
        if not any((s | 1 << v) in cset for v in range(n) if not s >> v & 1)
    }


def pmcs_by_orderings(g: Graph) -> frozenset[VertexSet]:
    out: set[VertexSet] = set()
    for rows in minimal_triangulations(g):
        out |= _maximal_cliques_brute(rows)
    return frozenset(out)


def brute_pmcs(g: Graph, method: str = "filter") -> frozenset[VertexSet]:
    """PMCs by subset filtering (``filter``) or via minimal triangulations (``orderings``)."""
    if method == "filter":
        return pmcs_by_filter(g)
    if method == "orderings":
        return pmcs_by_orderings(g)
    raise ValueError(f"unknown PMC oracle method {method!r}")


def treewidth_exact(g: Graph, mask: VertexSet | None = None) -> int:
    """Treewidth of G[mask], minimised over all elimination orderings.

    Uses the subset recurrence TW(X) = min_v max(TW(X - v), |Q(X - v, v)|)
    with Q(X, v) the vertices outside X + v reachable from v through X.
    Returns -1 for the empty graph.
    """
    if mask is None:
        mask = g.all
    k = popcount(mask)
    _guard(k, MAX_TW_CHECK, "treewidth")
    if k == 0:
        return -1
    sub, _ = g.induced(mask)
    n = sub.n
    adj = sub.adj
    full = sub.all

    def q(x: VertexSet, v: int) -> int:
        seen = 1 << v
        frontier = seen
        out = 0
        while frontier:
            nb = 0
            for y in iter_bits(frontier):
                nb |= adj[y]
            nb &= ~seen
            seen |= nb
            out |= nb & ~x
            frontier = nb & x
        return popcount(out & full)

    tw = {0: -1}
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            x = vset(combo)
            best = n
            for v in combo:
                rest = x & ~(1 << v)
                cand = max(tw[rest], q(rest, v))
                if cand < best:
                    best = cand
            tw[x] = best
    return tw[full]


def is_independent(g: Graph, mask: VertexSet) -> bool:
    return all(not (g.adj[v] & mask) for v in iter_bits(mask))


def is_forest(g: Graph, mask: VertexSet) -> bool:
    parent = {v: v for v in iter_bits(mask)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in iter_bits(mask):
        for v in iter_bits(g.adj[u] & mask):
            if u < v:
                ru, rv = find(u), find(v)
                if ru == rv:
                    return False
                parent[ru] = rv
    return True


def has_treewidth_at_most(g: Graph, mask: VertexSet, t: int) -> bool:
    if t == 0:
        return is_independent(g, mask)
    if t == 1:
        return is_forest(g, mask)
    if popcount(mask) <= t + 1:
        return True
    return treewidth_exact(g, mask) <= t


def _is_vertex_cover(g: Graph, mask: VertexSet) -> bool:
    outside = g.all & ~mask
    return all(not (g.adj[v] & outside) for v in iter_bits(outside))


def _subsets_by_size(n: int, descending: bool):
    sizes = range(n, -1, -1) if descending else range(n + 1)
    for size in sizes:
        for combo in combinations(range(n), size):
            yield vset(combo)


def _max_subset(g: Graph, ok) -> tuple[int, VertexSet | None]:
    for s in _subsets_by_size(g.n, descending=True):
        if ok(s):
            return popcount(s), s
    return -1, None


def _min_subset(g: Graph, ok) -> tuple[float, VertexSet | None]:
    for s in _subsets_by_size(g.n, descending=False):
        if ok(s):
            return popcount(s), s
    return INF, None


def _distance_ok(g: Graph, mask: VertexSet, d: int) -> bool:
    dist = g.distances()
    verts = list(iter_bits(mask))
    return all(dist[u][v] >= d for i, u in enumerate(verts) for v in verts[i + 1:])


PROBLEMS = ("mis", "mif", "tw", "cvc", "cfvs", "dist-is", "red-blue")


def brute_solve_with_witness(g: Graph, problem: str, **params):
    """Exhaustive optimum and one optimal set.

    ``mis``/``mif``/``tw``/``dist-is`` maximise; ``cvc``/``cfvs``/``red-blue``
    minimise. Infeasible minimisation returns ``inf``. Connectivity of the
    complement accepts the empty complement for ``cfvs`` (``allow_empty``).
    """
    _guard(g.n, MAX_SUBSET_N, "subset")
    if problem == "mis":
        return _max_subset(g, lambda s: is_independent(g, s))
    if problem == "mif":
        return _max_subset(g, lambda s: is_forest(g, s))
    if problem == "tw":
        t = params["t"]
        return _max_subset(g, lambda s: has_treewidth_at_most(g, s, t))
    if problem == "dist-is":
        d = params["d"]
        return _max_subset(g, lambda s: _distance_ok(g, s, d))
    if problem == "cvc":
        # a connected vertex cover of an edgeless graph would be empty; callers guard this
        return _min_subset(g, lambda s: s != 0 and _is_vertex_cover(g, s) and g.is_connected_set(s))
    if problem == "cfvs":
        allow_empty = params.get("allow_empty", True)
        return _min_subset(
            g,
            lambda s: is_forest(g, g.all & ~s)
            and g.is_connected_set(s)
            and (s != 0 or allow_empty),
        )
    if problem == "red-blue":
        reds, blues = params["reds"], params["blues"]
        blue_list = list(iter_bits(blues))
        for size in range(len(blue_list) + 1):
            for combo in combinations(blue_list, size):
                chosen = vset(combo)
                if all(g.adj[r] & chosen for r in iter_bits(reds)):
                    return size, chosen
        return INF, None
    raise ValueError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")


def brute_solve(g: Graph, problem: str, **params):
    return brute_solve_with_witness(g, problem, **params)[0]


def brute_max_connected_complement(g: Graph, t: int, allow_empty: bool = True) -> int:
    """Max |F| with tw(G[F]) <= t and G - F connected (nonempty unless allowed)."""
    _guard(g.n, MAX_SUBSET_N, "subset")
    for s in _subsets_by_size(g.n, descending=True):
        rest = g.all & ~s
        if not rest and not allow_empty:
            continue
        if g.is_connected_set(rest) and has_treewidth_at_most(g, s, t):
            return popcount(s)
    return -1
