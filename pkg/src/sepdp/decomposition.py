"""Potential maximal cliques, blocks and good triples.

A :class:`Decomposition` bundles everything the two dynamic programs walk
over: the blocks ``(S, C)`` sorted by ``|S u C|`` and, for each block, the
good triples ``(S, C, Omega)`` together with the child blocks hanging off
``Omega``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PMCBudgetExceeded, VerificationError
from .graph_core import (
    Graph,
    VertexSet,
    canonical_key,
    components,
    components_with_boundary,
    components_within,
    iter_bits,
    lowest,
    popcount,
    reach,
)
from .minsep import SeparatorSet, enumerate_minimal_separators, full_components


def default_pmc_budget(n: int) -> int:
    return 20 * max(n, 1) ** 3


def is_pmc(g: Graph, omega: VertexSet) -> bool:
    """Potential maximal clique test.

    ``omega`` is a PMC iff G - omega has no full component and every
    nonadjacent pair of ``omega`` is covered by the neighbourhood of some
    component of G - omega.
    """
    if not omega:
        return False
    adj = g.adj
    # covered[u]: union of N(D) over components D of G - omega with u in N(D)
    covered: dict[int, int] = {}
    for _, nb in components_with_boundary(g, g.all & ~omega):
        if nb == omega:
            return False
        for u in iter_bits(nb):
            covered[u] = covered.get(u, 0) | nb
    for u in iter_bits(omega):
        if omega & ~(adj[u] | covered.get(u, 0) | 1 << u):
            return False
    return True


def _prefix_graph(g: Graph, i: int) -> Graph:
    keep = (1 << i) - 1
    return Graph(i, [g.adj[v] & keep for v in range(i)])


def _search_order(g: Graph) -> list[int]:
    # BFS order per component so that prefixes stay as connected as possible
    order: list[int] = []
    seen = 0
    for start in range(g.n):
        if seen >> start & 1:
            continue
        seen |= 1 << start
        queue = [start]
        for v in queue:
            order.append(v)
            for u in iter_bits(g.adj[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
    return order


def enumerate_pmcs(
    g: Graph,
    seps: SeparatorSet | None = None,
    max_pmcs: int | None = None,
    max_seps: int | None = None,
) -> frozenset[VertexSet]:
    """All potential maximal cliques of ``g``.

    Vertices are added one at a time. A PMC of the graph induced by the
    first ``i+1`` vertices (new vertex ``a``) either comes from a PMC of the
    previous prefix (unchanged or extended by ``a``), or is ``S + a`` for a
    minimal separator ``S``, or is ``S | (C & T)`` where ``S`` is a minimal
    separator that is new at this prefix and avoids ``a``, ``C`` a full
    component of ``S`` avoiding ``a``, and ``T`` any minimal separator.
    Every candidate passes through :func:`is_pmc`, so the output is sound
    by construction; completeness is checked against exhaustive search.

    ``seps`` (the separators of ``g`` itself) is only used to skip one
    enumeration on the last prefix.
    """
    if g.n == 0:
        return frozenset()
    if max_pmcs is None:
        max_pmcs = default_pmc_budget(g.n)
    order = _search_order(g)
    h = g.relabel(order)
    pmcs: set[VertexSet] = {1}
    prev_seps: frozenset[VertexSet] = frozenset()
    for i in range(1, h.n):
        gi = _prefix_graph(h, i + 1)
        if i + 1 == h.n and seps is not None:
            cur_seps = frozenset(_relabel_mask(s, order) for s in seps)
        else:
            cur_seps = enumerate_minimal_separators(gi, max_seps).as_set()
        a = 1 << i
        cand: set[VertexSet] = set()
        nxt: set[VertexSet] = set()
        for omega in pmcs:
            if is_pmc(gi, omega):
                nxt.add(omega)
            elif is_pmc(gi, omega | a):
                nxt.add(omega | a)
        for s in cur_seps:
            cand.add(s | a)
            # S | (C & T) only for separators new at this prefix, a outside S and C
            if s & a or s in prev_seps:
                continue
            for c in full_components(gi, s):
                if c & a:
                    continue
                for t in cur_seps:
                    inter = c & t
                    if inter:
                        cand.add(s | inter)
        cand -= nxt
        for omega in cand:
            if is_pmc(gi, omega):
                nxt.add(omega)
        if len(nxt) > max_pmcs:
            raise PMCBudgetExceeded(f"PMC budget exceeded: more than {max_pmcs} PMCs")
        pmcs = nxt
        prev_seps = cur_seps
    return frozenset(_relabel_back(o, order) for o in pmcs)


def _relabel_mask(mask: VertexSet, order: list[int]) -> VertexSet:
    pos = {v: i for i, v in enumerate(order)}
    out = 0
    for v in iter_bits(mask):
        out |= 1 << pos[v]
    return out


def _relabel_back(mask: VertexSet, order: list[int]) -> VertexSet:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << order[i]
    return out


@dataclass(frozen=True)
class Block:
    S: VertexSet
    C: VertexSet

    @property
    def size(self) -> int:
        return popcount(self.S | self.C)

    def sort_key(self):
        return (self.size, canonical_key(self.S), canonical_key(self.C))


@dataclass(frozen=True)
class GoodTriple:
    block: Block
    omega: VertexSet
    children: tuple[Block, ...]


def blocks_sorted(g: Graph, seps) -> list[Block]:
    """All blocks, smallest first; ``(emptyset, K)`` for each component K."""
    out = {Block(0, comp) for comp in components(g)}
    for s in seps:
        if not s:
            continue
        for c in full_components(g, s):
            out.add(Block(s, c))
    return sorted(out, key=Block.sort_key)


def good_triples_for(g: Graph, block: Block, pmcs) -> list[GoodTriple]:
    """Good triples of ``block`` with children in component order."""
    whole = block.S | block.C
    out = []
    for omega in sorted(pmcs, key=canonical_key):
        if omega & ~whole or omega == block.S or omega & block.S != block.S:
            continue
        children = tuple(
            Block(g.neighbors(ci), ci) for ci in components_within(g, block.C & ~omega)
        )
        out.append(GoodTriple(block, omega, children))
    return out


class Decomposition:
    """Separators, PMCs, sorted blocks and their good triples for one graph."""

    def __init__(
        self,
        g: Graph,
        max_seps: int | None = None,
        max_pmcs: int | None = None,
    ):
        self.graph = g
        self.separators = enumerate_minimal_separators(g, max_seps)
        self.pmcs = enumerate_pmcs(g, self.separators, max_pmcs, max_seps)
        self.blocks = blocks_sorted(g, self.separators)
        self.index = {b: i for i, b in enumerate(self.blocks)}
        self.triples: list[list[GoodTriple]] = []
        for block in self.blocks:
            triples = good_triples_for(g, block, self._candidates(block))
            for tr in triples:
                for child in tr.children:
                    j = self.index.get(child)
                    if j is None or child.size >= block.size:
                        raise VerificationError(f"child {child} of {block} is not a smaller block")
            self.triples.append(triples)

    def _candidates(self, block: Block):
        # PMCs containing S: filter cheaply on the lowest vertex of S first
        if not block.S:
            return [o for o in self.pmcs if o & block.C == o]
        return self._pmcs_containing(lowest(block.S))

    def _pmcs_containing(self, v: int):
        if not hasattr(self, "_by_vertex"):
            by_vertex: dict[int, list[VertexSet]] = {}
            for omega in self.pmcs:
                for u in iter_bits(omega):
                    by_vertex.setdefault(u, []).append(omega)
            self._by_vertex = by_vertex
        return self._by_vertex.get(v, [])

    def roots(self) -> list[int]:
        """Block indices of the ``(emptyset, K)`` blocks."""
        return [i for i, b in enumerate(self.blocks) if not b.S]

    def counts(self) -> dict[str, int]:
        return {
            "separators": len(self.separators),
            "pmcs": len(self.pmcs),
            "blocks": len(self.blocks),
            "good_triples": sum(len(t) for t in self.triples),
        }
