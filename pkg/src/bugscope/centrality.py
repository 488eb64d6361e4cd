"""Exact betweenness centrality over the rationals.

Betweenness sums over unordered vertex pairs, so values are half of those
obtained with the ordered-pair convention.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Optional, Tuple

from .errors import CapExceededError, DisconnectedGraphError
from .graph import Graph

ORACLE_MAX_N = 12


def rational_str(q: Fraction) -> str:
    """``"p/q"`` in lowest terms, integers as ``"k"``."""
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class BetweennessProfile:
    per_vertex: Tuple[Fraction, ...]
    average: Fraction
    is_uniform: bool

    @classmethod
    def from_values(cls, values) -> "BetweennessProfile":
        values = tuple(values)
        n = len(values)
        avg = sum(values, Fraction(0)) / n if n else Fraction(0)
        return cls(values, avg, len(set(values)) <= 1)

    def to_dict(self) -> dict:
        return {
            "n": len(self.per_vertex),
            "per_vertex": [rational_str(b) for b in self.per_vertex],
            "average": rational_str(self.average),
            "is_uniform": self.is_uniform,
        }


def _source_dependencies(adj, n, s):
    """Dependencies of ``s`` on every vertex, as integers over a common denominator.

    Returns ``(numerators, denominator, reached)``.
    """
    dist = [-1] * n
    sigma = [0] * n
    dist[s] = 0
    sigma[s] = 1
    order = [s]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        dv = dist[v] + 1
        sv = sigma[v]
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                order.append(w)
                sigma[w] = sv
            elif dist[w] == dv:
                sigma[w] += sv
    denom = lcm(*(sigma[v] for v in order))
    # scaled[v] = denom * (1 + delta[v]) / sigma[v]
    scaled = [0] * n
    for w in reversed(order):
        acc = denom // sigma[w]
        dw = dist[w] + 1
        for x in adj[w]:
            if dist[x] == dw:
                acc += scaled[x]
        scaled[w] = acc
    nums = [0] * n
    for v in order:
        if v != s:
            nums[v] = sigma[v] * scaled[v] - denom
    return nums, denom, len(order)


def betweenness_exact(g: Graph) -> BetweennessProfile:
    """Brandes-style accumulation with exact big-integer path counts."""
    n = g.n
    adj = g.adj
    by_denom = defaultdict(lambda: [0] * n)
    for s in range(n):
        nums, denom, reached = _source_dependencies(adj, n, s)
        if reached < n:
            raise DisconnectedGraphError()
        acc = by_denom[denom]
        for v in range(n):
            if nums[v]:
                acc[v] += nums[v]
    values = [Fraction(0)] * n
    for denom in sorted(by_denom):
        acc = by_denom[denom]
        for v in range(n):
            if acc[v]:
                values[v] += Fraction(acc[v], 2 * denom)
    return BetweennessProfile.from_values(values)


def betweenness_oracle(g: Graph) -> BetweennessProfile:
    """Betweenness by listing every shortest path explicitly."""
    n = g.n
    if n > ORACLE_MAX_N:
        raise CapExceededError(f"path-enumeration oracle is limited to n <= {ORACLE_MAX_N}")
    adj = g.adj
    values = [Fraction(0)] * n
    for s in range(n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) < n:
            raise DisconnectedGraphError()
        for t in range(s + 1, n):
            paths = []
            stack = [(t, (t,))]
            while stack:
                v, suffix = stack.pop()
                if v == s:
                    paths.append(suffix)
                    continue
                for u in adj[v]:
                    if dist[u] == dist[v] - 1:
                        stack.append((u, (u,) + suffix))
            tally = [0] * n
            for p in paths:
                for x in p[1:-1]:
                    tally[x] += 1
            for x in range(n):
                if tally[x]:
                    values[x] += Fraction(tally[x], len(paths))
    return BetweennessProfile.from_values(values)


class BugVerdict(NamedTuple):
    is_bug: bool
    value: Optional[Fraction]


def is_bug(g: Graph) -> BugVerdict:
    prof = betweenness_exact(g)
    return BugVerdict(prof.is_uniform, prof.average if prof.is_uniform else None)
