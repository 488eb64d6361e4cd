"""Generators for the known coBUG families, each with its predicted betweenness."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import PreconditionError
from .graph import (
    Graph,
    complete_bipartite,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    inflate,
    star_graph,
)

FAMILIES = ("stars", "cycles", "multipartite", "above-one", "inflated")

INFLATION_FACTOR = 27
INFLATION_BASE_VERTICES = 721
INFLATION_STAR_COPIES = 81
INFLATION_STAR_SIZE = 3924


@dataclass(frozen=True)
class Construction:
    family: str
    parameters: Tuple[int, ...]
    graph: Graph
    predicted_betweenness: Fraction

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "parameters": list(self.parameters),
            "n": self.graph.n,
            "edges": self.graph.m,
            "predicted_betweenness": str(self.predicted_betweenness),
        }


def _stars(k: int, ell: int) -> Graph:
    return disjoint_union(*([star_graph(ell)] * k))


def stars_cobug(k: int, ell: int) -> Construction:
    """k disjoint copies of K_{1,ell}; complement has betweenness ell/(ell+1)."""
    if k < 2:
        raise PreconditionError("need at least two star components")
    if ell < 0:
        raise PreconditionError("star size must be nonnegative")
    return Construction("stars", (k, ell), _stars(k, ell), Fraction(ell, ell + 1))


def cycles_cobug(lengths: Sequence[int]) -> Construction:
    lengths = tuple(lengths)
    if len(lengths) < 2:
        raise PreconditionError("need at least two cycles")
    if any(c < 4 for c in lengths):
        raise PreconditionError("every cycle must have length at least 4")
    g = disjoint_union(*(cycle_graph(c) for c in lengths))
    return Construction("cycles", lengths, g, Fraction(1))


def multipartite_plus_stars(part_sizes: Sequence[int]) -> Construction:
    """Complete multipartite H plus (m - t) copies of K_{1,m-1}, for m > t."""
    parts = tuple(part_sizes)
    h = complete_multipartite(parts)
    m, t = h.m, h.n
    if m <= t:
        raise PreconditionError(
            f"the multipartite part needs more edges than vertices (m={m}, t={t})"
        )
    g = disjoint_union(h, *([star_graph(m - 1)] * (m - t)))
    return Construction("multipartite", parts, g, Fraction(1))


def above_one_parameters(t: int) -> dict:
    return {
        "k": 4 * t * t - 4 * t - 1,
        "ell": 4 * t * t - 1,
        "b": t + 1,
        "c": 2 * t,
    }


def family_above_one(t: int) -> Construction:
    """k stars K_{1,ell} and b copies of K_{c,c}; betweenness (4t+1)/(4t)."""
    if t < 2:
        raise PreconditionError("need t >= 2")
    p = above_one_parameters(t)
    g = disjoint_union(
        *([star_graph(p["ell"])] * p["k"]), *([complete_bipartite(p["c"], p["c"])] * p["b"])
    )
    return Construction("above-one", (t,), g, Fraction(4 * t + 1, 4 * t))


def inflated_cycles_cobug(cycle_lengths: Sequence[int] = (INFLATION_BASE_VERTICES,)) -> Construction:
    """27-fold inflation of a union of cycles on 721 vertices, plus 81 stars K_{1,3924}."""
    lengths = tuple(cycle_lengths)
    if sum(lengths) != INFLATION_BASE_VERTICES:
        raise PreconditionError(f"cycle lengths must sum to {INFLATION_BASE_VERTICES}")
    if any(c < 4 for c in lengths):
        raise PreconditionError("every cycle must have length at least 4")
    base = disjoint_union(*(cycle_graph(c) for c in lengths))
    h = inflate(base, INFLATION_FACTOR)
    g = disjoint_union(h, *([star_graph(INFLATION_STAR_SIZE)] * INFLATION_STAR_COPIES))
    return Construction("inflated", lengths, g, Fraction(13, 4))


def build(family: str, params: Sequence[int]) -> Construction:
    """Dispatch on the family name used by the command line."""
    params = list(params)
    if family == "stars":
        if len(params) != 2:
            raise PreconditionError("stars takes k and ell")
        return stars_cobug(*params)
    if family == "cycles":
        return cycles_cobug(params)
    if family == "multipartite":
        return multipartite_plus_stars(params)
    if family == "above-one":
        if len(params) != 1:
            raise PreconditionError("above-one takes t")
        return family_above_one(params[0])
    if family == "inflated":
        return inflated_cycles_cobug(params or (INFLATION_BASE_VERTICES,))
    raise PreconditionError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
