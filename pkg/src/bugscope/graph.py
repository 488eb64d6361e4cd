"""Undirected simple graphs on vertices ``0..n-1`` and basic structure queries."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import PreconditionError

#: Diameter of a disconnected graph.
INFINITE = math.inf


class Graph:
    """Immutable undirected simple graph with dense integer labels.

    Adjacency is stored as a tuple of frozensets, one per vertex.
    """

    __slots__ = ("n", "adj", "_m", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2
        self._edges = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from neighbour sets without validation (they must be symmetric)."""
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(frozenset(s) for s in adj)
        g._m = sum(len(s) for s in g.adj) // 2
        g._edges = None
        return g

    @property
    def m(self) -> int:
        return self._m

    @property
    def edges(self) -> tuple:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
            )
        return self._edges

    def iter_edges(self) -> Iterator[tuple]:
        for u, nb in enumerate(self.adj):
            for v in nb:
                if u < v:
                    yield u, v

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list:
        return [len(s) for s in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        if self._m <= 12:
            return f"Graph(n={self.n}, edges={list(self.edges)})"
        return f"Graph(n={self.n}, m={self._m})"


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(ell: int) -> Graph:
    """K_{1,ell} with centre 0."""
    return Graph(ell + 1, ((0, i) for i in range(1, ell + 1)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    offsets = [0]
    for p in parts:
        if p < 1:
            raise ValueError("part sizes must be positive")
        offsets.append(offsets[-1] + p)
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    n = offsets[-1]
    return Graph(n, ((u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    """Concatenate graphs, relabelling in argument order."""
    adj = []
    offset = 0
    for g in graphs:
        adj.extend({v + offset for v in nb} for nb in g.adj)
        offset += g.n
    return Graph.from_adjacency(adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Vertex ``v`` of ``g`` becomes ``perm[v]``."""
    adj = [None] * g.n
    for v, nb in enumerate(g.adj):
        adj[perm[v]] = {perm[u] for u in nb}
    return Graph.from_adjacency(adj)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    return Graph.from_adjacency(
        [{index[u] for u in g.adj[v] if u in index} for v in vertices]
    )


# ---------------------------------------------------------------------------
# structure queries
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    everything = frozenset(range(g.n))
    return Graph.from_adjacency([everything - nb - {v} for v, nb in enumerate(g.adj)])


@dataclass(frozen=True)
class Component:
    vertices: tuple
    n_vertices: int
    n_edges: int
    star_ell: Optional[int]

    @property
    def is_star(self) -> bool:
        return self.star_ell is not None

    def to_dict(self) -> dict:
        return {
            "vertices": self.n_vertices,
            "edges": self.n_edges,
            "star": self.star_ell,
        }


@dataclass(frozen=True)
class ComponentInventory:
    components: tuple

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i) -> Component:
        return self.components[i]

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    def equal_stars(self) -> Optional[int]:
        """Common ``ell`` if every component is ``K_{1,ell}`` for one ``ell``."""
        ells = {c.star_ell for c in self.components}
        if len(ells) == 1 and None not in ells:
            return ells.pop()
        return None

    def to_list(self) -> list:
        return [c.to_dict() for c in self.components]


def _star_parameter(g: Graph, verts: Sequence[int], n_edges: int) -> Optional[int]:
    k = len(verts)
    if n_edges != k - 1:
        return None
    if max(len(g.adj[v]) for v in verts) != k - 1:
        return None
    return k - 1


def connected_components(g: Graph) -> ComponentInventory:
    """Components in order of their smallest vertex, star components flagged."""
    seen = bytearray(g.n)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        order = [s]
        i = 0
        while i < len(order):
            for w in g.adj[order[i]]:
                if not seen[w]:
                    seen[w] = 1
                    order.append(w)
            i += 1
        verts = tuple(sorted(order))
        n_edges = sum(len(g.adj[v]) for v in verts) // 2
        comps.append(Component(verts, len(verts), n_edges, _star_parameter(g, verts, n_edges)))
    return ComponentInventory(tuple(comps))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(bfs_distances(g, 0)) == g.n


def bfs_distances(g: Graph, source: int) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in g.adj[v]:
            if w not in dist:
                dist[w] = dv
                queue.append(w)
    return dist


def diameter(g: Graph):
    """Largest BFS distance; :data:`INFINITE` for a disconnected graph."""
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if len(dist) < g.n:
            return INFINITE
        best = max(best, max(dist.values()))
    return best


def has_spanning_double_star(g: Graph) -> Optional[tuple]:
    """Centres ``(a, b)`` of a spanning double star, or ``None``.

    A spanning double star with centres ``a, b`` exists exactly when ``ab`` is
    an edge and ``N[a] | N[b]`` covers every vertex.
    """
    n = g.n
    for a, b in g.iter_edges():
        na, nb = g.adj[a], g.adj[b]
        if len(na) + len(nb) < n:
            continue
        if len(na | nb) == n:
            return (a, b) if a < b else (b, a)
    return None


def inflate(h: Graph, k: int) -> Graph:
    """Replace each vertex by a k-clique and each edge by a complete join."""
    if k < 1:
        raise PreconditionError(f"inflation factor must be positive, got {k}")
    adj = []
    for x in range(h.n):
        blob = set(range(x * k, x * k + k))
        for y in h.adj[x]:
            blob.update(range(y * k, y * k + k))
        for i in range(k):
            adj.append(blob - {x * k + i})
    return Graph.from_adjacency(adj)


def excess(h: Graph) -> int:
    return h.m - h.n
