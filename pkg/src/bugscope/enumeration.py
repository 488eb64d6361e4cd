"""Canonical forms and enumeration of small connected graphs.

Up to six vertices the canonical code is the minimum adjacency code over all
vertex permutations.  From seven vertices on, a degree-refined
individualisation search produces the same kind of code over a much smaller
set of candidate labellings.  Larger graphs come from graph6 corpora.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator, List, Sequence, Tuple

from .errors import CapExceededError
from .graph import Graph

MAX_ENUMERATION_N = 8
BRUTE_FORCE_MAX_N = 6


def _pair_bits(n: int) -> List[List[int]]:
    """bit[i][j]: weight of pair {i, j} in graph6 (column-major) order, MSB first."""
    total = n * (n - 1) // 2
    bit = [[0] * n for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            w = 1 << (total - 1 - k)
            bit[i][j] = bit[j][i] = w
            k += 1
    return bit


_BITS = [_pair_bits(n) for n in range(0, 17)]


def _bits(n: int):
    return _BITS[n] if n < len(_BITS) else _pair_bits(n)


def _masks(g: Graph) -> List[int]:
    return [sum(1 << u for u in nb) for nb in g.adj]


def _edges_from_masks(masks: Sequence[int]) -> List[Tuple[int, int]]:
    return [(u, v) for u, m in enumerate(masks) for v in range(u + 1, len(masks)) if m >> v & 1]


def _code(edges, order_of, bit) -> int:
    return sum(bit[order_of[u]][order_of[v]] for u, v in edges)


def brute_force_code(n: int, edges) -> int:
    bit = _bits(n)
    best = None
    for perm in permutations(range(n)):
        c = sum(bit[perm[u]][perm[v]] for u, v in edges)
        if best is None or c < best:
            best = c
    return 0 if best is None else best


def _refine(masks: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        new_cells = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups = {}
            for v in c:
                sig = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def refined_code(n: int, edges, masks: Sequence[int] | None = None) -> int:
    if n <= 1:
        return 0
    if masks is None:
        masks = [0] * n
        for u, v in edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    bit = _bits(n)
    best = None
    stack = [_refine(masks, [list(range(n))])]
    while stack:
        cells = stack.pop()
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            order_of = [0] * n
            for pos, c in enumerate(cells):
                order_of[c[0]] = pos
            code = _code(edges, order_of, bit)
            if best is None or code < best:
                best = code
            continue
        cell = cells[target]
        for v in cell:
            split = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1:]
            stack.append(_refine(masks, split))
    return best


def canonical_code(g: Graph) -> tuple:
    """Isomorphism-invariant key ``(n, code)``."""
    if g.n <= BRUTE_FORCE_MAX_N:
        return g.n, brute_force_code(g.n, g.edges)
    return g.n, refined_code(g.n, g.edges, _masks(g))


def graph_from_code(n: int, code: int) -> Graph:
    total = n * (n - 1) // 2
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if code >> (total - 1 - k) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(*canonical_code(g))


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> Tuple[int, ...]:
    if n == 1:
        return (0,)
    codes = set()
    for parent in _connected_codes(n - 1):
        pg = graph_from_code(n - 1, parent)
        base_edges = list(pg.edges)
        base_masks = _masks(pg) + [0]
        for nbrs in range(1, 1 << (n - 1)):
            edges = base_edges + [(u, n - 1) for u in range(n - 1) if nbrs >> u & 1]
            if n <= BRUTE_FORCE_MAX_N:
                codes.add(brute_force_code(n, edges))
            else:
                masks = list(base_masks)
                masks[n - 1] = nbrs
                for u in range(n - 1):
                    if nbrs >> u & 1:
                        masks[u] |= 1 << (n - 1)
                codes.add(refined_code(n, edges, masks))
    return tuple(sorted(codes, key=lambda c: (bin(c).count("1"), c)))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs.

    Ordered by edge count, then canonical code.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise CapExceededError(
            f"built-in enumeration supports 1 <= n <= {MAX_ENUMERATION_N}; "
            f"supply a graph6 corpus for n={n}"
        )
    for code in _connected_codes(n):
        yield graph_from_code(n, code)


def connected_graphs_up_to(n_max: int) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_connected_graphs(n)


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of all graphs on ``n`` vertices,
    built as disjoint unions of connected representatives."""
    from itertools import combinations_with_replacement, product

    from .graph import disjoint_union

    if not 1 <= n <= MAX_ENUMERATION_N:
        raise CapExceededError(f"built-in enumeration supports 1 <= n <= {MAX_ENUMERATION_N}")
    for parts in _partitions(n):
        sizes = sorted(set(parts), reverse=True)
        choices = []
        for size in sizes:
            reps = list(enumerate_connected_graphs(size))
            choices.append(list(combinations_with_replacement(reps, parts.count(size))))
        for pick in product(*choices):
            yield disjoint_union(*(g for group in pick for g in group))
