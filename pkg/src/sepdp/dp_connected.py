"""Maximum F with treewidth(G[F]) <= t and G - F connected.

The treewidth DP is enriched with a *characteristic*: the partition that
the components of ``G[S u C] - F`` induce on ``S - W`` (for block entries)
or on ``Omega - W`` (for good-triple entries). Partial solutions leaving a
component that misses ``S`` are dropped, since no extension can reconnect
it. Gluing child solutions into a triple merges their parts through the
graph ``G[Omega - W]`` with every child part completed into a clique.

When every separator and PMC is covered by ``q`` cliques, a characteristic
has at most ``q`` parts and there are at most ``Bell(q)`` of them per key;
both bounds are enforced at run time against the supplied clique
partitions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import Decomposition
from .dp_treewidth import subsets_upto
from .errors import DisconnectedComplementError, VerificationError
from .graph_classes import greedy_clique_partition, is_connected_graph
from .graph_core import Graph, VertexSet, components, components_within, popcount

Characteristic = tuple[VertexSet, ...]

DEFAULT_Q_LIMIT = 6


def bell(q: int) -> int:
    row = [1]
    for _ in range(q):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def canonical(parts) -> Characteristic:
    """Parts sorted by smallest member; equal partitions compare equal."""
    return tuple(sorted(parts, key=lambda m: m & -m))


def characteristic_of(
    g: Graph,
    F: VertexSet,
    S: VertexSet,
    C: VertexSet,
    W: VertexSet,
    scope: VertexSet,
) -> Characteristic | None:
    """Partition of ``scope - W`` by the components of G[S u C] - F.

    Returns None (reject) when ``S`` is nonempty and some component misses
    ``scope``.
    """
    parts = []
    for comp in components_within(g, (S | C) & ~F):
        part = comp & scope
        if not part:
            if S:
                return None
            continue
        parts.append(part)
    return canonical(parts)


def _merge(parts: Characteristic, extra: Characteristic) -> Characteristic:
    out = list(parts)
    for p in extra:
        hit = 0
        keep = []
        for q in out:
            if q & p:
                hit |= q
            else:
                keep.append(q)
        keep.append(hit | p)
        out = keep
    return canonical(out)


def map_correctly(g: Graph, omega: VertexSet, W: VertexSet, cs) -> Characteristic:
    """Components of G[Omega - W] after completing every part of ``cs`` to a clique."""
    scope = omega & ~W
    for c in cs:
        for p in c:
            if p & ~scope:
                raise ValueError("characteristic part lies outside Omega - W")
    out = canonical(components_within(g, scope))
    for c in cs:
        out = _merge(out, c)
    return out


@dataclass
class CharacteristicStats:
    """Largest part counts and per-key characteristic counts seen by the DP."""

    max_alpha_parts: int = 0
    max_beta_parts: int = 0
    max_alpha_per_key: int = 0
    max_beta_per_key: int = 0
    alpha_keys: int = 0
    beta_keys: int = 0


def _width_lookup(g: Graph, given, key: VertexSet, limit: int, what: str) -> int:
    parts = None if given is None else given.get(key)
    if parts is None:
        parts = greedy_clique_partition(g, key)
    covered = 0
    for p in parts:
        if covered & p or not g.is_clique(p):
            raise ValueError(f"invalid clique partition for {what}")
        covered |= p
    if covered != key:
        raise ValueError(f"clique partition does not cover the {what}")
    if len(parts) > limit:
        raise ValueError(f"{what} needs {len(parts)} cliques, above the limit {limit}")
    return len(parts)


def _fill(
    decomp: Decomposition,
    t: int,
    sep_cliques,
    pmc_cliques,
    q_limit: int,
    allow_empty: bool,
    stats: CharacteristicStats,
):
    g = decomp.graph
    cap = t + 1
    index = decomp.index
    sep_widths: dict[VertexSet, int] = {}
    pmc_widths: dict[VertexSet, int] = {}
    # alpha[bi][W][c] = (value, triple_index, W', c')
    alpha: list[dict] = []
    # beta[bi][ti][(W, c)] = (value, child characteristics)
    beta: list[list[dict]] = []
    for bi, block in enumerate(decomp.blocks):
        S = block.S
        if S:
            q_sep = sep_widths.get(S)
            if q_sep is None:
                q_sep = sep_widths[S] = _width_lookup(g, sep_cliques, S, q_limit, "separator")
        best: dict = {}
        betas = []
        for ti, triple in enumerate(decomp.triples[bi]):
            omega = triple.omega
            q_pmc = pmc_widths.get(omega)
            if q_pmc is None:
                q_pmc = pmc_widths[omega] = _width_lookup(g, pmc_cliques, omega, q_limit, "PMC")
            children = [(index[ch], ch.S) for ch in triple.children]
            values: dict = {}
            for w in subsets_upto(omega, cap):
                states = {canonical(components_within(g, omega & ~w)): (popcount(w), ())}
                for ci, si in children:
                    ws = w & si
                    lost = popcount(ws)
                    options = [(c, v[0]) for c, v in alpha[ci].get(ws, {}).items()]
                    nxt: dict = {}
                    for c_prev, (val, chosen) in states.items():
                        for c_child, cval in options:
                            c_new = _merge(c_prev, c_child)
                            total = val + cval - lost
                            cur = nxt.get(c_new)
                            if cur is None or total > cur[0]:
                                nxt[c_new] = (total, chosen + (c_child,))
                    states = nxt
                    if not states:
                        break
                if not states:
                    continue
                if len(states) > stats.max_beta_per_key:
                    stats.max_beta_per_key = len(states)
                if len(states) > bell(q_pmc):
                    raise VerificationError("more PMC characteristics than Bell(q)")
                stats.beta_keys += 1
                for c_prime, (val, chosen) in states.items():
                    if len(c_prime) > q_pmc:
                        raise VerificationError("PMC characteristic exceeds clique width")
                    stats.max_beta_parts = max(stats.max_beta_parts, len(c_prime))
                    values[(w, c_prime)] = (val, chosen)
                    if S:
                        if any(not (p & S) for p in c_prime):
                            continue
                        c = canonical(p & S for p in c_prime)
                    else:
                        if len(c_prime) > 1 or (not c_prime and not allow_empty):
                            continue
                        c = ()
                    slot = best.setdefault(w & S, {})
                    cur = slot.get(c)
                    if cur is None or val > cur[0]:
                        slot[c] = (val, ti, w, c_prime)
            betas.append(values)
        for chars in best.values():
            stats.max_alpha_per_key = max(stats.max_alpha_per_key, len(chars))
            if not S:
                continue
            if len(chars) > bell(q_sep):
                raise VerificationError("more separator characteristics than Bell(q)")
            for c in chars:
                if len(c) > q_sep:
                    raise VerificationError("separator characteristic exceeds clique width")
                stats.max_alpha_parts = max(stats.max_alpha_parts, len(c))
        stats.alpha_keys += len(best)
        alpha.append(best)
        beta.append(betas)
    return alpha, beta


def _reconstruct(decomp: Decomposition, alpha, beta, root: int, key) -> VertexSet:
    out = 0
    stack = [(root, key)]
    while stack:
        bi, (wk, ck) = stack.pop()
        _, ti, w, c_prime = alpha[bi][wk][ck]
        triple = decomp.triples[bi][ti]
        out |= w
        _, chosen = beta[bi][ti][(w, c_prime)]
        for child, c_child in zip(triple.children, chosen):
            stack.append((decomp.index[child], (w & child.S, c_child)))
    return out


def solve_max_induced_tw_connected(
    g: Graph,
    t: int,
    sep_cliques: dict[VertexSet, list[VertexSet]] | None = None,
    pmc_cliques: dict[VertexSet, list[VertexSet]] | None = None,
    *,
    allow_empty_complement: bool = True,
    q_limit: int = DEFAULT_Q_LIMIT,
    decomp: Decomposition | None = None,
    stats: CharacteristicStats | None = None,
    max_seps: int | None = None,
    max_pmcs: int | None = None,
) -> tuple[int, VertexSet]:
    """Largest F with treewidth(G[F]) <= t and G - F connected.

    Separators or PMCs missing from the clique-partition maps fall back to a
    greedy clique cover, which must stay within ``q_limit`` cliques. With
    ``allow_empty_complement`` the empty graph G - V counts as connected.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if g.n == 0 or not is_connected_graph(g):
        raise DisconnectedComplementError("complement cannot be connected: input graph is disconnected")
    if decomp is None:
        decomp = Decomposition(g, max_seps, max_pmcs)
    if stats is None:
        stats = CharacteristicStats()
    alpha, beta = _fill(decomp, t, sep_cliques, pmc_cliques, q_limit, allow_empty_complement, stats)
    (root,) = decomp.roots()
    entry = alpha[root].get(0, {}).get(())
    if entry is None:
        raise DisconnectedComplementError("no solution leaves a connected complement")
    size = entry[0]
    witness = _reconstruct(decomp, alpha, beta, root, (0, ()))
    if popcount(witness) != size:
        raise VerificationError(f"witness has {popcount(witness)} vertices, optimum is {size}")
    rest = components(g, witness)
    if len(rest) > 1 or (not rest and not allow_empty_complement):
        raise VerificationError("returned solution leaves a disconnected complement")
    return size, witness


def connected_vertex_cover(g: Graph, **kwargs) -> tuple[int, VertexSet]:
    """Minimum connected vertex cover as ``(size, cover)``."""
    if g.num_edges() == 0:
        raise ValueError("connected vertex cover needs a graph with at least one edge")
    _, F = solve_max_induced_tw_connected(g, 0, **kwargs)
    cover = g.all & ~F
    return popcount(cover), cover


def connected_feedback_vertex_set(g: Graph, **kwargs) -> tuple[int, VertexSet]:
    """Minimum connected feedback vertex set as ``(size, fvs)``."""
    _, F = solve_max_induced_tw_connected(g, 1, **kwargs)
    fvs = g.all & ~F
    return popcount(fvs), fvs
