"""Closeness, edge weights and co-betweenness of a graph inside a larger host.

A vertex ``v`` is close to an edge ``xy`` when it is adjacent to ``x`` or
``y`` (the endpoints themselves included).  For a host of ``n`` vertices an
edge ``e`` weighs ``1 / (n - |close(e)|)`` and the co-betweenness of a vertex
is the total weight of the edges close to it.  When the complement of ``h``
has diameter at most two, ``B(x) = total_weight - coB(x)`` in the complement.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

from .centrality import betweenness_exact
from .errors import PreconditionError, UndefinedWeightError
from .graph import Graph, complement, diameter

Edge = Tuple[int, int]


@dataclass(frozen=True)
class ClosenessTables:
    close_of_edge: Mapping[Edge, FrozenSet[int]]
    close_of_vertex: Tuple[FrozenSet[Edge], ...]
    n_total: int


def closeness_tables(h: Graph, n_total: Optional[int] = None) -> ClosenessTables:
    """Materialise every close set.  Memory grows with the sum of their sizes."""
    n_total = h.n if n_total is None else n_total
    if n_total < h.n:
        raise PreconditionError("host must contain the graph")
    close_e = {}
    close_v = [set() for _ in range(h.n)]
    for u, v in h.edges:
        cl = h.adj[u] | h.adj[v]
        close_e[(u, v)] = cl
        for x in cl:
            close_v[x].add((u, v))
    return ClosenessTables(close_e, tuple(frozenset(s) for s in close_v), n_total)


def edge_weight(tables: ClosenessTables, e: Edge) -> Fraction:
    u, v = e
    key = (u, v) if u < v else (v, u)
    size = len(tables.close_of_edge[key])
    if size >= tables.n_total:
        raise UndefinedWeightError(key)
    return Fraction(1, tables.n_total - size)


def close_count_profile(h: Graph) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Per vertex, how many close edges it has of each close-set size.

    Entry ``x`` is a sorted tuple of ``(size, count)`` pairs.  Computed without
    materialising close sets: the edges close to ``x`` are the edges incident
    to ``N(x)``, minus double counts for edges with both ends in ``N(x)``.
    """
    adj = h.adj
    n = h.n
    by_vertex = [defaultdict(int) for _ in range(n)]
    inside = defaultdict(Counter)
    for u in range(n):
        au = adj[u]
        du = len(au)
        for v in au:
            if v <= u:
                continue
            av = adj[v]
            common = au & av
            size = du + len(av) - len(common)
            by_vertex[u][size] += 1
            by_vertex[v][size] += 1
            if common:
                inside[size].update(common)
    profile = []
    for x in range(n):
        acc = defaultdict(int)
        for u in adj[x]:
            for size, c in by_vertex[u].items():
                acc[size] += c
        for size, cnt in inside.items():
            c = cnt.get(x)
            if c:
                acc[size] -= c
        profile.append(tuple(sorted((s, c) for s, c in acc.items() if c)))
    return tuple(profile)


def edge_size_counts(h: Graph) -> Dict[int, int]:
    """Number of edges of each close-set size."""
    counts = Counter()
    adj = h.adj
    for u, v in h.iter_edges():
        counts[_close_size(adj, u, v)] += 1
    return dict(counts)


def _close_size(adj, u, v) -> int:
    a, b = adj[u], adj[v]
    return len(a) + len(b) - len(a & b)


def co_betweenness_from_profile(profile_entry, n_total: int) -> Fraction:
    total = Fraction(0)
    for size, count in profile_entry:
        if size >= n_total:
            raise UndefinedWeightError(f"<edge with {size} close vertices>")
        total += Fraction(count, n_total - size)
    return total


class WeightedComplement:
    """Edge weights and co-betweenness for ``h`` in a host of ``n_total`` vertices."""

    def __init__(self, h: Graph, n_total: Optional[int] = None):
        self.graph = h
        self.n_total = h.n if n_total is None else n_total
        sizes = edge_size_counts(h)
        for s in sizes:
            if s >= self.n_total:
                bad = next(e for e in h.iter_edges() if _close_size(h.adj, *e) == s)
                raise UndefinedWeightError(bad)
        self.edges_by_close_size = sizes
        self.total_weight = sum(
            (Fraction(c, self.n_total - s) for s, c in sorted(sizes.items())), Fraction(0)
        )
        cache = {}
        values = []
        for entry in close_count_profile(h):
            val = cache.get(entry)
            if val is None:
                val = cache[entry] = co_betweenness_from_profile(entry, self.n_total)
            values.append(val)
        self.co_betweenness = tuple(values)

    def weight(self, e: Edge) -> Fraction:
        u, v = e
        if not self.graph.has_edge(u, v):
            raise KeyError(e)
        return Fraction(1, self.n_total - _close_size(self.graph.adj, u, v))

    @property
    def weights(self) -> Dict[Edge, Fraction]:
        return {e: self.weight(e) for e in self.graph.edges}

    @property
    def is_uniform(self) -> bool:
        return len(set(self.co_betweenness)) <= 1


def co_betweenness_all(h: Graph, n_total: Optional[int] = None) -> WeightedComplement:
    return WeightedComplement(h, n_total)


def co_betweenness_from_tables(tables: ClosenessTables) -> Tuple[Fraction, ...]:
    """Direct summation over materialised close sets."""
    return tuple(
        sum((edge_weight(tables, e) for e in cl), Fraction(0)) for cl in tables.close_of_vertex
    )


def weight_identity_check(g: Graph) -> bool:
    """Check ``B_G(x) == total_weight - coB(x)`` on the complement, for every ``x``."""
    d = diameter(g)
    if d > 2:
        raise PreconditionError(f"weight identity needs diameter <= 2, got {d}")
    prof = betweenness_exact(g)
    wc = co_betweenness_all(complement(g))
    return all(b == wc.total_weight - c for b, c in zip(prof.per_vertex, wc.co_betweenness))


def close_inclusion_violation(h: Graph) -> Optional[Tuple[int, int]]:
    """First pair ``(x, y)`` with ``close(x)`` a proper subset of ``close(y)``."""
    close_v = closeness_tables(h).close_of_vertex
    n = h.n
    for x in range(n):
        cx = close_v[x]
        for y in range(n):
            if len(cx) < len(close_v[y]) and cx <= close_v[y]:
                return x, y
    return None
