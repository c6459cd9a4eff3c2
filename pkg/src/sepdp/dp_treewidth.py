"""Maximum induced subgraph of treewidth at most t.

Dynamic programming over blocks in increasing ``|S u C|``:

* ``alpha[block][W]`` for ``W`` a subset of ``S`` with ``|W| <= t+1``: the
  largest partial solution inside ``S u C`` meeting ``S`` exactly in ``W``;
* ``beta[(block, Omega)][W]`` for ``W`` a subset of ``Omega``: the same but
  meeting ``Omega`` exactly in ``W``. It is ``|W|`` plus, for every child
  block ``(S_i, C_i)``, ``alpha[child][W & S_i] - |W & S_i|``; the
  running sum over the first ``i`` children is the intermediate ``gamma_i``.

``alpha`` maximises ``beta`` over the good triples of the block and all
``W'`` with ``W' & S == W``. The optimum of a connected graph is
``alpha[(emptyset, V)][emptyset]``; components are summed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .decomposition import Decomposition, GoodTriple
from .errors import VerificationError
from .graph_core import Graph, VertexSet, iter_bits, popcount, vset

NEG_INF = float("-inf")


def subsets_upto(mask: VertexSet, k: int):
    """All subsets of ``mask`` with at most ``k`` members."""
    verts = list(iter_bits(mask))
    for r in range(min(k, len(verts)) + 1):
        for combo in combinations(verts, r):
            yield vset(combo)


@dataclass
class DPTable:
    """Filled tables plus one maximising predecessor per entry."""

    t: int
    decomposition: Decomposition
    # alpha[block_index][W] = (value, triple_index, W')
    alpha: list[dict[VertexSet, tuple[int, int, VertexSet]]] = field(default_factory=list)
    # beta[block_index][triple_index][W] = value
    beta: list[list[dict[VertexSet, int]]] = field(default_factory=list)

    def size(self) -> int:
        return sum(len(a) for a in self.alpha) + sum(len(b) for bs in self.beta for b in bs)


def _beta_value(table: DPTable, triple: GoodTriple, w: VertexSet) -> float:
    index = table.decomposition.index
    total = popcount(w)
    for child in triple.children:
        ws = w & child.S
        entry = table.alpha[index[child]].get(ws)
        if entry is None:
            return NEG_INF
        total += entry[0] - popcount(ws)
    return total


def fill_table(decomp: Decomposition, t: int) -> DPTable:
    if t < 0:
        raise ValueError("t must be nonnegative")
    table = DPTable(t, decomp)
    cap = t + 1
    for bi, block in enumerate(decomp.blocks):
        best: dict[VertexSet, tuple[int, int, VertexSet]] = {}
        betas = []
        for ti, triple in enumerate(decomp.triples[bi]):
            values = {}
            for w in subsets_upto(triple.omega, cap):
                val = _beta_value(table, triple, w)
                if val == NEG_INF:
                    continue
                values[w] = val
                key = w & block.S
                cur = best.get(key)
                if cur is None or val > cur[0]:
                    best[key] = (val, ti, w)
            betas.append(values)
        for w in best:
            if popcount(w) > cap:
                raise VerificationError(f"DP key with |W|={popcount(w)} > t+1")
        table.alpha.append(best)
        table.beta.append(betas)
    return table


def reconstruct_solution(table: DPTable) -> VertexSet:
    """Backtrack the stored predecessors from every root block."""
    decomp = table.decomposition
    out = 0
    stack = [(bi, 0) for bi in decomp.roots()]
    while stack:
        bi, w = stack.pop()
        _, ti, wp = table.alpha[bi][w]
        triple = decomp.triples[bi][ti]
        out |= wp
        for child in triple.children:
            stack.append((decomp.index[child], wp & child.S))
    return out


def optimum(table: DPTable) -> int:
    return sum(table.alpha[bi][0][0] for bi in table.decomposition.roots())


def solve_max_induced_tw(
    g: Graph,
    t: int,
    decomp: Decomposition | None = None,
    max_seps: int | None = None,
    max_pmcs: int | None = None,
) -> tuple[int, VertexSet]:
    """Largest F with treewidth(G[F]) <= t, as ``(|F|, F)``.

    ``t = 0`` is Maximum Independent Set, ``t = 1`` Maximum Induced Forest.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t + 1 > g.n:
        return g.n, g.all
    if decomp is None:
        decomp = Decomposition(g, max_seps, max_pmcs)
    table = fill_table(decomp, t)
    size = optimum(table)
    witness = reconstruct_solution(table)
    if popcount(witness) != size:
        raise VerificationError(f"witness has {popcount(witness)} vertices, optimum is {size}")
    return size, witness


def check_witness(g: Graph, witness: VertexSet, t: int) -> bool:
    """Independent post-hoc treewidth check of a returned solution."""
    from . import oracle

    if t == 0:
        return oracle.is_independent(g, witness)
    if t == 1:
        return oracle.is_forest(g, witness)
    if popcount(witness) <= oracle.MAX_TW_CHECK:
        return oracle.treewidth_exact(g, witness) <= t
    raise ValueError("witness too large for the exact treewidth check")
