"""Exhaustive checks of the structural lemmas over every small graph.

Each lemma is a decidable predicate evaluated on every graph in its domain.
A report counts how many graphs were checked and lists failures in graph6.
The report body is deterministic: graphs are visited in canonical order and
no timing data is stored inside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

from .centrality import betweenness_exact, betweenness_oracle
from .certify import is_cobug
from .cobetweenness import co_betweenness_all
from .enumeration import MAX_ENUMERATION_N, enumerate_connected_graphs, enumerate_graphs
from .errors import CapExceededError, PreconditionError
from .graph import (
    Graph,
    bfs_distances,
    complement,
    connected_components,
    diameter,
    has_spanning_double_star,
    is_connected,
)
from .io import to_graph6
from .search import SearchConfig, candidate_components, complement_is_equal_stars, verify_star_exclusion
from .structure import (
    complement_is_disjoint_cliques,
    excess_from_degrees,
    has_induced_k2_plus_k1,
    is_complete_multipartite,
    structural_filters,
    uniformity_params,
)

MAX_COUNTEREXAMPLES = 10
SIX_VERTEX_LIMIT = 5


@dataclass
class LemmaResult:
    name: str
    checked: int = 0
    failed: int = 0
    counterexamples: List[str] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> int:
        return self.checked - self.failed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def vacuous(self) -> bool:
        return self.checked == 0

    def record(self, g: Graph, holds: bool) -> None:
        self.checked += 1
        if not holds:
            self.failed += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(to_graph6(g))

    def to_dict(self) -> dict:
        out = {
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "vacuous": self.vacuous,
            "counterexamples": list(self.counterexamples),
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    n_max: int
    ell_max: int
    cap: int
    lemmas: Dict[str, LemmaResult]
    star_exclusions: Dict[int, dict]

    @property
    def all_passed(self) -> bool:
        return all(r.ok for r in self.lemmas.values())

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "ell_max": self.ell_max,
            "cap": self.cap,
            "all_passed": self.all_passed,
            "lemmas": {k: v.to_dict() for k, v in self.lemmas.items()},
            "star_exclusions": {str(k): v for k, v in self.star_exclusions.items()},
        }


def _connected(n_max: int) -> Iterable[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_connected_graphs(n)


def _all_graphs(n_max: int) -> Iterable[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n)


# ---------------------------------------------------------------------------
# per-graph predicates on connected G
# ---------------------------------------------------------------------------

def _ratio_bound(g, prof, diam):
    bound = Fraction(complement(g).m, g.n)
    if prof.average < bound:
        return False
    return (prof.average == bound) == (diam <= 2)


def _weight_identity(g, prof):
    wc = co_betweenness_all(complement(g))
    return all(b == wc.total_weight - c for b, c in zip(prof.per_vertex, wc.co_betweenness))


def _double_star(g, diam):
    gbar = complement(g)
    rhs = is_connected(gbar) and has_spanning_double_star(gbar) is not None
    return (diam >= 3) == rhs


def _multipartite_three_way(h):
    # an edgeless graph is vacuously (0, n)-uniform
    uni = uniformity_params(h)
    a = h.m == 0 or (uni.is_uniform and (uni.m, uni.t) == (h.m, h.n))
    b = has_induced_k2_plus_k1(h) is None
    c = complement_is_disjoint_cliques(h)
    return a == b == c


def _six_vertex(h):
    if uniformity_params(h).is_uniform:
        return True
    return any(c != "min-size-6" for c in structural_filters(h).failed_claims)


def run_lemmas(n_max: int = 7, ell_max: int = 8, cap: Optional[int] = None,
               progress: Optional[Callable[[str], None]] = None) -> VerificationReport:
    """Evaluate every lemma on all graphs up to ``n_max`` vertices and the star
    exclusions for ``0 <= ell <= ell_max`` with components up to ``cap``."""
    if not 1 <= n_max <= MAX_ENUMERATION_N:
        raise CapExceededError(f"n_max must lie in 1..{MAX_ENUMERATION_N}")
    if not 0 <= ell_max <= 8:
        raise PreconditionError("star exclusions cover 0 <= ell <= 8")
    cap = n_max if cap is None else cap
    if not 1 <= cap <= MAX_ENUMERATION_N:
        raise CapExceededError(f"cap must lie in 1..{MAX_ENUMERATION_N}")
    say = progress or (lambda msg: None)

    names = (
        "oracle-equivalence",
        "path-length-sum",
        "ratio-bound",
        "weight-identity",
        "double-star",
        "multipartite-three-way",
        "multipartite-uniform",
        "excess-identity",
        "min-degree-3-excess",
        "uniform-counting",
        "six-vertex",
        "candidates-have-six-vertices",
        "cobug-consistency",
        "low-betweenness-equal-stars",
        "bug-gap",
        "diameter-3-at-least-1",
        "equal-stars-in-window",
        "star-exclusion",
    )
    res = {name: LemmaResult(name) for name in names}

    say("connected graphs")
    for g in _connected(n_max):
        prof = betweenness_exact(g)
        diam = diameter(g)
        res["oracle-equivalence"].record(g, betweenness_oracle(g).per_vertex == prof.per_vertex)
        res["path-length-sum"].record(
            g, sum(prof.per_vertex) == Fraction(sum(d - 1 for s in range(g.n) for d in _dists(g, s)), 2)
        )
        res["ratio-bound"].record(g, _ratio_bound(g, prof, diam))
        if diam <= 2:
            res["weight-identity"].record(g, _weight_identity(g, prof))
        if g.n >= 2:
            res["double-star"].record(g, _double_star(g, diam))
        res["multipartite-three-way"].record(g, _multipartite_three_way(g))
        if is_complete_multipartite(g):
            res["multipartite-uniform"].record(g, uniformity_params(g).is_uniform)
        res["excess-identity"].record(g, g.m - g.n == excess_from_degrees(g))
        if g.n and min(g.degrees()) >= 3:
            res["min-degree-3-excess"].record(g, 2 * (g.m - g.n) >= g.n)
        uni = uniformity_params(g)
        if uni.is_uniform and g.m:
            res["uniform-counting"].record(g, uni.m * g.n == uni.t * g.m)
        if g.n <= SIX_VERTEX_LIMIT and g.m and not connected_components(g)[0].is_star:
            res["six-vertex"].record(g, _six_vertex(g))

        if prof.is_uniform:
            b = prof.average
            res["bug-gap"].record(g, not 0 < b < Fraction(1, 2))
            if diam >= 3:
                res["diameter-3-at-least-1"].record(g, b >= 1)
            if Fraction(3, 4) < b <= Fraction(9, 10):
                ok = complement_is_equal_stars(g)
                ell = connected_components(complement(g)).equal_stars() if ok else None
                res["equal-stars-in-window"].record(g, ok and b == Fraction(ell, ell + 1))

    cfg = SearchConfig(0, 0, min(cap, SIX_VERTEX_LIMIT))
    for h in candidate_components(cfg):
        res["candidates-have-six-vertices"].record(h, False)
    res["candidates-have-six-vertices"].note = f"candidate stream checked up to {cfg.component_vertex_cap} vertices"

    say("all graphs")
    for hbar in _all_graphs(n_max):
        rep = is_cobug(hbar, with_structure=False)
        gbar = complement(hbar)
        if is_connected(gbar):
            direct = betweenness_exact(gbar)
            same = rep.is_cobug == direct.is_uniform and (
                not rep.is_cobug or rep.betweenness_value == direct.average
            )
        else:
            same = not rep.is_cobug
        res["cobug-consistency"].record(hbar, same)
        if rep.is_cobug and rep.betweenness_value < 1 and len(rep.inventory) > 1:
            res["low-betweenness-equal-stars"].record(
                hbar, rep.inventory.equal_stars() is not None and not rep.exotic
            )

    exclusions = {}
    for ell in range(ell_max + 1):
        say(f"star exclusion ell={ell}")
        report = verify_star_exclusion(ell, cap=cap)
        d = report.to_dict()
        d["vacuous"] = report.search.candidates == 0
        exclusions[ell] = d
        res["star-exclusion"].checked += 1
        if not report.passed:
            res["star-exclusion"].failed += 1
            res["star-exclusion"].counterexamples.extend(
                sorted(to_graph6(h.graph()) for h in report.search.found)[:MAX_COUNTEREXAMPLES]
            )
    return VerificationReport(n_max, ell_max, cap, res, exclusions)


def _dists(g: Graph, s: int):
    return [d for t, d in bfs_distances(g, s).items() if t != s]
