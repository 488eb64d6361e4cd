"""Uniformity, excess, closeness and the structural filters for non-star
components of a hypothetical exotic coBUG."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .cobetweenness import close_count_profile, close_inclusion_violation, edge_size_counts
from .errors import PreconditionError
from .graph import Graph, complement, connected_components, excess

CLAIMS = (
    "degree-1",
    "triangle-deg2",
    "c4c5-adjacent-deg2",
    "path-of-three-deg2",
    "close-inclusion",
    "min-close-4",
    "min-size-6",
    "excess-lt-2",
    "closeness-bound",
)


@dataclass(frozen=True)
class UniformityReport:
    is_uniform: bool
    m: Optional[int]
    t: Optional[int]
    is_complete_multipartite: bool

    def to_dict(self) -> dict:
        return {
            "is_uniform": self.is_uniform,
            "m": self.m,
            "t": self.t,
            "is_complete_multipartite": self.is_complete_multipartite,
        }


def vertex_close_sizes(h: Graph) -> List[int]:
    return [sum(c for _, c in entry) for entry in close_count_profile(h)]


def uniformity_params(h: Graph) -> UniformityReport:
    vsizes = set(vertex_close_sizes(h))
    esizes = set(edge_size_counts(h))
    uniform = len(vsizes) <= 1 and len(esizes) <= 1
    m = next(iter(vsizes)) if uniform and vsizes else None
    t = next(iter(esizes)) if uniform and esizes else None
    return UniformityReport(uniform, m, t, is_complete_multipartite(h))


def has_induced_k2_plus_k1(h: Graph) -> Optional[Tuple[int, int, int]]:
    """A triple ``(x, y, z)`` with ``yz`` an edge and ``x`` adjacent to neither."""
    for y, z in h.iter_edges():
        covered = h.adj[y] | h.adj[z]
        for x in range(h.n):
            if x not in covered:
                return x, y, z
    return None


def is_complete_multipartite(h: Graph) -> bool:
    return has_induced_k2_plus_k1(h) is None


def complement_is_disjoint_cliques(h: Graph) -> bool:
    hbar = complement(h)
    return all(c.n_edges == c.n_vertices * (c.n_vertices - 1) // 2
               for c in connected_components(hbar))


def excess_from_degrees(h: Graph) -> Fraction:
    return Fraction(sum(d - 2 for d in h.degrees()), 2)


def closeness(h: Graph) -> int:
    """Largest number of edges close to a single vertex."""
    return max(vertex_close_sizes(h), default=0)


@dataclass(frozen=True)
class StructuralVerdict:
    failed_claims: Tuple[str, ...]
    excess: int
    closeness: int
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def passes(self) -> bool:
        return not self.failed_claims

    def to_dict(self) -> dict:
        return {
            "passes": self.passes,
            "failed_claims": list(self.failed_claims),
            "excess": self.excess,
            "closeness": self.closeness,
        }


def _deg2_triangle(h, deg):
    for x in range(h.n):
        if deg[x] == 2:
            y, z = sorted(h.adj[x])
            if h.has_edge(y, z):
                return x
    return None


def _adjacent_deg2_short_cycle(h, deg):
    for x, y in h.iter_edges():
        if deg[x] != 2 or deg[y] != 2:
            continue
        (u,) = h.adj[x] - {y}
        (v,) = h.adj[y] - {x}
        if u == v:
            continue
        if h.has_edge(u, v) or h.adj[u] & h.adj[v]:
            return x, y
    return None


def _deg2_path_of_three(h, deg):
    for y in range(h.n):
        if deg[y] != 2:
            continue
        x, z = sorted(h.adj[y])
        if deg[x] == 2 and deg[z] == 2:
            return x, y, z
    return None


def structural_filters(h: Graph) -> StructuralVerdict:
    """Evaluate every structural claim on a connected non-star graph.

    All claims are evaluated so the verdict lists each violated condition.
    """
    inv = connected_components(h)
    if len(inv) != 1:
        raise PreconditionError("structural filters apply to connected graphs")
    if inv[0].is_star:
        raise PreconditionError("stars are not subject to the structural filters")
    deg = h.degrees()
    failed = []
    wit = {}

    low = [v for v in range(h.n) if deg[v] == 1]
    if low:
        failed.append("degree-1")
        wit["degree-1"] = low[0]
    for name, probe in (
        ("triangle-deg2", _deg2_triangle),
        ("c4c5-adjacent-deg2", _adjacent_deg2_short_cycle),
        ("path-of-three-deg2", _deg2_path_of_three),
    ):
        w = probe(h, deg)
        if w is not None:
            failed.append(name)
            wit[name] = w
    pair = close_inclusion_violation(h)
    if pair is not None:
        failed.append("close-inclusion")
        wit["close-inclusion"] = pair
    small = [e for e in h.iter_edges() if len(h.adj[e[0]] | h.adj[e[1]]) < 4]
    if small:
        failed.append("min-close-4")
        wit["min-close-4"] = min(small)
    if h.n < 6:
        failed.append("min-size-6")
    ex = excess(h)
    if ex < 2:
        failed.append("excess-lt-2")
    vsizes = vertex_close_sizes(h)
    tight = [v for v in range(h.n) if vsizes[v] < 2 * deg[v]]
    if tight:
        failed.append("closeness-bound")
        wit["closeness-bound"] = tight[0]
    return StructuralVerdict(tuple(failed), ex, max(vsizes, default=0), wit)


@dataclass(frozen=True)
class StarUniformConstraints:
    n: Optional[Fraction]
    feasible: bool
    reasons: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "n": None if self.n is None else str(self.n),
            "feasible": self.feasible,
            "reasons": list(self.reasons),
        }


def star_uniform_constraints(ell: int, m: int, t: int) -> StarUniformConstraints:
    """Conditions on a coBUG made of ``K_{1,ell}`` stars plus an (m,t)-uniform non-star part.

    ``n`` is the vertex count forced by equal co-betweenness, returned before
    its integrality is checked.
    """
    if ell < 0 or m < 1 or t < 2:
        raise PreconditionError("need ell >= 0, m >= 1, t >= 2")
    if m == ell:
        return StarUniformConstraints(None, False, ("m-equals-ell",))
    extra = Fraction(ell * (ell + 1 - t), m - ell)
    n = ell + 1 + extra
    reasons = []
    if not extra >= t:
        reasons.append("star-room")  # ell(ell+1-t)/(m-ell) >= t
    if not (m > ell and t < ell + 1):
        reasons.append("m-gt-ell-and-t-lt-ell-plus-1")
    if not ell * (ell + 1) >= m * t:
        reasons.append("ell-ell-plus-1-ge-mt")
    if n.denominator != 1 or n <= 0:
        reasons.append("n-not-positive-integer")
    return StarUniformConstraints(n, not reasons, tuple(reasons))


def closeness_bound(ell: int, c: int) -> int:
    """Largest host size compatible with a ``K_{1,ell}`` star and closeness ``c``."""
    if not c > ell >= 0:
        raise PreconditionError(f"closeness bound needs c > ell >= 0, got c={c}, ell={ell}")
    return (c * (ell + 1) - 4 * ell) // (c - ell)
