"""Minimal separators: recognition, enumeration, and the odd-power map.

The odd-power map takes a minimal separator ``Sbar`` of ``G^k`` (``k = 2l+1``)
and constructs a minimal separator ``S`` of ``G`` with ``N^l[S] = Sbar``,
checking every intermediate claim along the way.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import PreconditionError, SeparatorBudgetExceeded, VerificationError
from .graph_core import (
    Graph,
    VertexSet,
    canonical_key,
    components,
    components_with_boundary,
    iter_bits,
    neighborhood_k,
    power,
    reach,
)


def default_separator_budget(n: int) -> int:
    return 10 * max(n, 1) ** 3


def full_components(g: Graph, sep: VertexSet) -> list[VertexSet]:
    """Components C of G - sep with N(C) = sep."""
    return [c for c, nb in components_with_boundary(g, g.all & ~sep) if nb == sep]


def is_minimal_separator(g: Graph, sep: VertexSet) -> bool:
    g.check_set(sep)
    return len(full_components(g, sep)) >= 2


def is_ab_minimal_separator(g: Graph, sep: VertexSet, a: int, b: int) -> bool:
    if (sep >> a | sep >> b) & 1:
        return False
    rest = g.all & ~sep
    ca = reach(g, a, rest)
    if ca >> b & 1:
        return False
    cb = reach(g, b, rest)
    return g.neighbors(ca) == sep and g.neighbors(cb) == sep


class SeparatorSet(tuple):
    """Deduplicated minimal separators in canonical order."""

    __slots__ = ()

    def __new__(cls, seps=()):
        return super().__new__(cls, sorted(set(seps), key=canonical_key))

    def as_set(self) -> frozenset[VertexSet]:
        return frozenset(self)


def enumerate_minimal_separators(g: Graph, max_seps: int | None = None) -> SeparatorSet:
    """All minimal separators of ``g``.

    Seeds with the separators close to each vertex, ``N(D)`` for the
    components ``D`` of ``G - N[v]``, then saturates: for every known ``S``
    and ``x`` in ``S``, each component ``D`` of ``G - (S | N[x])`` contributes
    ``N(D)``. The empty set is a minimal separator exactly when ``g`` is
    disconnected.
    """
    if max_seps is None:
        max_seps = default_separator_budget(g.n)
    found: set[VertexSet] = set()
    queue: list[VertexSet] = []

    def push(sep: VertexSet) -> None:
        if sep not in found:
            found.add(sep)
            queue.append(sep)
            if len(found) > max_seps:
                raise SeparatorBudgetExceeded(
                    f"separator budget exceeded: more than {max_seps} minimal separators"
                )

    adj = g.adj
    full = g.all
    for v in range(g.n):
        for _, nb in components_with_boundary(g, full & ~(adj[v] | 1 << v)):
            push(nb)
    while queue:
        sep = queue.pop()
        for x in iter_bits(sep):
            for _, nb in components_with_boundary(g, full & ~(sep | adj[x])):
                push(nb)
    return SeparatorSet(found)


class PowerMapTrace(NamedTuple):
    separator: VertexSet
    comp_a: VertexSet
    comp_b: VertexSet
    ball_a: VertexSet
    ball_b: VertexSet
    comp_b_tilde: VertexSet


def _power_map_trace(g: Graph, gk: Graph, l: int, sbar: VertexSet, a: int, b: int) -> PowerMapTrace:
    if not sbar:
        if reach(g, a, g.all) >> b & 1:
            raise PreconditionError("empty Sbar but a and b are connected in G^k")
        return PowerMapTrace(0, reach(gk, a, gk.all), reach(gk, b, gk.all), 0, 0, 0)
    if (sbar >> a | sbar >> b) & 1:
        raise PreconditionError("a or b lies in Sbar")
    rest = gk.all & ~sbar
    comp_a = reach(gk, a, rest)
    if comp_a >> b & 1:
        raise PreconditionError("Sbar does not separate a from b in G^k")
    comp_b = reach(gk, b, rest)
    if gk.neighbors(comp_a) != sbar:
        raise PreconditionError("component of a in G^k - Sbar is not full")
    if gk.neighbors(comp_b) != sbar:
        raise PreconditionError("component of b in G^k - Sbar is not full")

    ball_a = neighborhood_k(g, comp_a, l)
    ball_b = neighborhood_k(g, comp_b, l)
    # the two balls are at G-distance >= 2
    if g.closed_neighbors(ball_a) & ball_b:
        raise VerificationError("N^l[C_a] and N^l[C_b] are closer than distance 2")
    closed_a = g.closed_neighbors(ball_a)
    if closed_a >> b & 1:
        raise VerificationError("b lies in N[N^l[C_a]]")
    comp_b_tilde = reach(g, b, g.all & ~closed_a)
    sep = g.neighbors(comp_b_tilde)
    return PowerMapTrace(sep, comp_a, comp_b, ball_a, ball_b, comp_b_tilde)


def theorem1_map(
    g: Graph,
    k: int,
    sbar: VertexSet,
    a: int | None = None,
    b: int | None = None,
) -> VertexSet:
    """Pull a minimal separator of ``G^k`` back to one of ``G``.

    For odd ``k = 2l+1`` and an a,b-minimal separator ``sbar`` of ``G^k``,
    returns the minimal a,b-separator ``S = N(C~_b)`` of ``G``, where ``C~_b``
    is the component of ``G - N[N^l[C_a]]`` containing ``b``. Raises
    :class:`VerificationError` unless ``S`` is an a,b-minimal separator of
    ``G`` and ``N^l[S] == sbar``.

    Without ``a``/``b`` every pair of full components is tried and the first
    success is returned.
    """
    return theorem1_trace(g, k, sbar, a, b).separator


def theorem1_trace(
    g: Graph,
    k: int,
    sbar: VertexSet,
    a: int | None = None,
    b: int | None = None,
    gk: Graph | None = None,
) -> PowerMapTrace:
    if k < 1 or k % 2 == 0:
        raise PreconditionError(f"k must be odd and positive, got {k}")
    g.check_set(sbar)
    l = (k - 1) // 2
    if gk is None:
        gk = power(g, k)
    if a is not None and b is not None:
        g.check_vertex(a)
        g.check_vertex(b)
        pairs = [(a, b)]
    elif a is None and b is None:
        fulls = [c for c in components(gk, sbar) if gk.neighbors(c) == sbar]
        if len(fulls) < 2:
            raise PreconditionError("Sbar is not a minimal separator of G^k")
        pairs = [
            ((c1 & -c1).bit_length() - 1, (c2 & -c2).bit_length() - 1)
            for i, c1 in enumerate(fulls)
            for c2 in fulls[i + 1:]
        ]
    else:
        raise PreconditionError("give both a and b, or neither")

    failure: Exception | None = None
    for x, y in pairs:
        try:
            trace = _power_map_trace(g, gk, l, sbar, x, y)
        except (PreconditionError, VerificationError) as exc:
            failure = exc
            continue
        if not is_ab_minimal_separator(g, trace.separator, x, y):
            failure = VerificationError("constructed S is not an a,b-minimal separator of G")
            continue
        if neighborhood_k(g, trace.separator, l) != sbar:
            failure = VerificationError("N^l[S] differs from Sbar")
            continue
        return trace
    assert failure is not None
    raise failure


@dataclass
class PowerTheoremReport:
    k: int
    separators_g: int
    separators_power: int
    witness: dict[VertexSet, VertexSet] = field(default_factory=dict)
    injective: bool = True
    preimages_in_delta: bool = True

    @property
    def holds(self) -> bool:
        return (
            self.separators_power <= self.separators_g
            and self.injective
            and self.preimages_in_delta
            and len(self.witness) == self.separators_power
        )


def verify_power_theorem(
    g: Graph,
    k: int,
    max_seps: int | None = None,
    threads: int = 1,
) -> PowerTheoremReport:
    """Check |Delta(G^k)| <= |Delta(G)| with an explicit injective witness map.

    Raises :class:`VerificationError` if any clause fails.
    """
    if k < 1 or k % 2 == 0:
        raise PreconditionError(f"k must be odd and positive, got {k}")
    gk = power(g, k)
    delta_g = enumerate_minimal_separators(g, max_seps).as_set()
    delta_k = enumerate_minimal_separators(gk, max_seps)

    def pull(sbar: VertexSet) -> VertexSet:
        return theorem1_trace(g, k, sbar, gk=gk).separator

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            images = list(pool.map(pull, delta_k))
    else:
        images = [pull(s) for s in delta_k]

    report = PowerTheoremReport(k, len(delta_g), len(delta_k), dict(zip(delta_k, images)))
    report.injective = len(set(images)) == len(images)
    report.preimages_in_delta = all(s in delta_g for s in images)
    if not report.holds:
        raise VerificationError(
            f"odd-power separator bound failed for k={k}: "
            f"|Delta(G^k)|={report.separators_power}, |Delta(G)|={report.separators_g}, "
            f"injective={report.injective}, in_delta={report.preimages_in_delta}"
        )
    return report
