"""Exhaustive search for exotic coBUGs over small candidate components.

A candidate configuration is ``k`` copies of ``K_{1,ell}`` plus one or two
connected non-star components ``H``.  All vertices of a star component have
co-betweenness ``ell / (n - ell - 1)``, and the co-betweenness of a vertex of
``H`` only depends on ``H`` and the host size ``n``, so each configuration
reduces to exact equalities checked for every admissible ``n``.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterator, List, Optional, Tuple

from .centrality import betweenness_exact, rational_str
from .certify import CertificationReport, is_cobug
from .cobetweenness import close_count_profile
from .enumeration import MAX_ENUMERATION_N, canonical_code, enumerate_connected_graphs
from .errors import CapExceededError, PreconditionError
from .graph import Graph, complement, connected_components, disjoint_union, star_graph
from .io import read_graph6_file, to_graph6
from .structure import CLAIMS, closeness, closeness_bound, structural_filters, uniformity_params

log = logging.getLogger(__name__)

PAIR_OUTCOMES = ("window-empty", "co-betweenness-mismatch", "betweenness-at-least-1", "accepted")


@dataclass(frozen=True)
class SearchConfig:
    ell_min: int = 0
    ell_max: int = 8
    component_vertex_cap: int = 8
    n_cap: int = 200
    max_nonstar_components: int = 1
    low_betweenness_only: bool = True
    corpus: Optional[str] = None
    workers: int = 1

    def __post_init__(self):
        if not 0 <= self.ell_min <= self.ell_max:
            raise PreconditionError("need 0 <= ell_min <= ell_max")
        if self.component_vertex_cap < 1:
            raise PreconditionError("component_vertex_cap must be positive")
        if self.max_nonstar_components not in (1, 2):
            raise PreconditionError("max_nonstar_components must be 1 or 2")
        if self.n_cap < 1:
            raise PreconditionError("n_cap must be positive")

    @property
    def ells(self) -> range:
        return range(self.ell_min, self.ell_max + 1)

    def to_dict(self) -> dict:
        return {
            "ell_min": self.ell_min,
            "ell_max": self.ell_max,
            "component_vertex_cap": self.component_vertex_cap,
            "n_cap": self.n_cap,
            "max_nonstar_components": self.max_nonstar_components,
            "low_betweenness_only": self.low_betweenness_only,
            "corpus": self.corpus,
        }


@dataclass(frozen=True)
class Candidate:
    graph: Graph
    profiles: Tuple[tuple, ...]  # distinct per-vertex close-count profiles
    closeness: int

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class SearchHit:
    ell: int
    stars: int
    n: int
    components: Tuple[str, ...]  # graph6 of the non-star components
    report: CertificationReport

    def graph(self) -> Graph:
        from .io import from_graph6

        parts = [from_graph6(s) for s in self.components]
        return disjoint_union(*([star_graph(self.ell)] * self.stars), *parts)

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "stars": self.stars,
            "n": self.n,
            "components": list(self.components),
            "report": self.report.to_dict(),
        }


@dataclass
class SearchResult:
    config: SearchConfig
    found: List[SearchHit]
    cobugs: List[SearchHit]
    pruned_counts: Dict[str, int]
    pair_counts: Dict[str, int]
    enumerated: int
    candidates: int
    exhausted: bool
    wall_clock: float = 0.0
    eliminated_by: Dict[str, str] = field(default_factory=dict)

    def accounts_for_everything(self) -> bool:
        """Every enumerated graph and every (ell, configuration) pair has exactly one outcome."""
        if self.enumerated != sum(self.pruned_counts.values()) + self.candidates:
            return False
        combos = _combo_count(self.candidates, self.config.max_nonstar_components)
        return sum(self.pair_counts.values()) == combos * len(self.config.ells)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "found": [h.to_dict() for h in self.found],
            "cobugs": [h.to_dict() for h in self.cobugs],
            "pruned_counts": dict(sorted(self.pruned_counts.items())),
            "pair_counts": dict(sorted(self.pair_counts.items())),
            "enumerated": self.enumerated,
            "candidates": self.candidates,
            "exhausted": self.exhausted,
        }


def _combo_count(c: int, k: int) -> int:
    total = c
    if k == 2:
        total += c * (c + 1) // 2
    return total


# ---------------------------------------------------------------------------
# candidate screening
# ---------------------------------------------------------------------------

def _source_graphs(cfg: SearchConfig) -> Iterator[Graph]:
    for n in range(1, min(cfg.component_vertex_cap, MAX_ENUMERATION_N) + 1):
        yield from enumerate_connected_graphs(n)
    if cfg.corpus is not None:
        seen = set()
        for g in read_graph6_file(cfg.corpus):
            if MAX_ENUMERATION_N < g.n <= cfg.component_vertex_cap:
                key = canonical_code(g)
                if key not in seen:
                    seen.add(key)
                    yield g


def covers_configured_space(cfg: SearchConfig) -> bool:
    return cfg.component_vertex_cap <= MAX_ENUMERATION_N or cfg.corpus is not None


def screen(h: Graph, low_betweenness_only: bool = True) -> Optional[str]:
    """First reason ``h`` cannot be a non-star component, or ``None`` if it survives.

    Outside the low-betweenness regime only stars and disconnected graphs
    are set aside.
    """
    inv = connected_components(h)
    if len(inv) != 1:
        return "disconnected"
    if inv[0].is_star:
        return "star"
    if not low_betweenness_only:
        return None
    verdict = structural_filters(h)
    if verdict.failed_claims:
        return verdict.failed_claims[0]
    if uniformity_params(h).is_uniform:
        return "uniform"
    return None


def _candidate(h: Graph) -> Candidate:
    profiles = tuple(sorted(set(close_count_profile(h))))
    return Candidate(h, profiles, closeness(h))


def candidate_components(cfg: SearchConfig) -> Iterator[Graph]:
    """Connected non-star graphs up to the size cap that survive every filter."""
    for g in _source_graphs(cfg):
        if screen(g, cfg.low_betweenness_only) is None:
            yield g


def _screen_all(cfg: SearchConfig):
    pruned = Counter()
    survivors = []
    eliminated = {}
    enumerated = 0
    for g in _source_graphs(cfg):
        enumerated += 1
        reason = screen(g, cfg.low_betweenness_only)
        if reason is None:
            survivors.append(_candidate(g))
        else:
            pruned[reason] += 1
            eliminated[to_graph6(g)] = reason
    return survivors, pruned, enumerated, eliminated


# ---------------------------------------------------------------------------
# configuration evaluation
# ---------------------------------------------------------------------------

def _cob_matches(profile, n: int, ell: int) -> bool:
    """Exact test of ``sum count/(n - size) == ell/(n - ell - 1)`` in integers."""
    num, den = 0, 1
    for size, count in profile:
        d = n - size
        num = num * d + count * den
        den *= d
    return num * (n - ell - 1) == ell * den


def n_window(ell: int, combo, cfg: SearchConfig) -> Tuple[int, int]:
    t_total = sum(c.n for c in combo)
    if cfg.low_betweenness_only:
        lo = max(t_total + ell + 1, 3 * (ell + 1) + t_total)
        hi = cfg.n_cap
        for c in combo:
            if c.closeness > ell:
                hi = min(hi, closeness_bound(ell, c.closeness))
    else:
        lo, hi = t_total + ell + 1, cfg.n_cap
    return lo, hi


def _evaluate(ell: int, combo, cfg: SearchConfig):
    """Outcome for one (ell, components) pair and the accepted host sizes."""
    lo, hi = n_window(ell, combo, cfg)
    if lo > hi:
        return "window-empty", []
    t_total = sum(c.n for c in combo)
    m_total = sum(c.graph.m for c in combo)
    profiles = [p for c in combo for p in c.profiles]
    hits = []
    for n in range(lo, hi + 1, ell + 1):
        if all(_cob_matches(p, n, ell) for p in profiles):
            k = (n - t_total) // (ell + 1)
            hits.append((n, k, k * ell + m_total < n))
    if not hits:
        return "co-betweenness-mismatch", []
    if any(low for _, _, low in hits):
        return "accepted", hits
    return "betweenness-at-least-1", hits


def _evaluate_chunk(args):
    ell, combos, cfg = args
    return [(ell, idx, *_evaluate(ell, combo, cfg)) for idx, combo in combos]


def exotic_search(cfg: SearchConfig) -> SearchResult:
    start = time.perf_counter()
    survivors, pruned, enumerated, eliminated = _screen_all(cfg)
    combos = [(c,) for c in survivors]
    if cfg.max_nonstar_components == 2:
        combos += list(combinations_with_replacement(survivors, 2))
    log.info("%d graphs enumerated, %d candidates, %d configurations",
             enumerated, len(survivors), len(combos))

    tasks = [(ell, list(enumerate(combos)), cfg) for ell in cfg.ells]
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_evaluate_chunk, tasks))
    else:
        chunks = [_evaluate_chunk(t) for t in tasks]

    pair_counts = Counter({k: 0 for k in PAIR_OUTCOMES})
    found, cobugs = [], []
    for chunk in chunks:
        for ell, idx, outcome, hits in chunk:
            pair_counts[outcome] += 1
            combo = combos[idx]
            parts = tuple(to_graph6(c.graph) for c in combo)
            if outcome != "accepted" and parts and len(combo) == 1:
                eliminated.setdefault(f"{parts[0]}@{ell}", outcome)
            for n, k, low in hits:
                g = disjoint_union(*([star_graph(ell)] * k), *(c.graph for c in combo))
                hit = SearchHit(ell, k, n, parts, is_cobug(g, with_structure=False))
                cobugs.append(hit)
                if hit.report.exotic:
                    found.append(hit)
    return SearchResult(
        config=cfg,
        found=found,
        cobugs=cobugs,
        pruned_counts=dict(pruned),
        pair_counts=dict(pair_counts),
        enumerated=enumerated,
        candidates=len(survivors),
        exhausted=covers_configured_space(cfg),
        wall_clock=time.perf_counter() - start,
        eliminated_by=eliminated,
    )


# ---------------------------------------------------------------------------
# star exclusions
# ---------------------------------------------------------------------------

def min_cob_upper_bound(ell: int) -> Optional[int]:
    """Largest n with ``ell/(n-ell-1) >= 6/(n-4)``; ``None`` when unbounded (ell >= 6)."""
    if ell >= 6:
        return None
    return (2 * ell + 6) // (6 - ell)


def three_star_lower_bound(ell: int) -> int:
    return 3 * ell + 9


def feasible_closeness(ell: int) -> List[int]:
    """Closeness values whose bound still reaches the three-star lower bound."""
    lower = three_star_lower_bound(ell)
    out = []
    c = ell + 1
    while closeness_bound(ell, c) >= lower:
        out.append(c)
        c += 1
    return out


@dataclass
class StarExclusionReport:
    ell: int
    cap: int
    lower_n: int
    upper_n: Optional[int]
    window_empty: bool
    feasible_closeness: List[int]
    feasible_excess: List[int]
    numeric_candidates: Dict[str, str]
    checks: Dict[str, bool]
    search: SearchResult

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "cap": self.cap,
            "lower_n": self.lower_n,
            "upper_n": self.upper_n,
            "window_empty": self.window_empty,
            "feasible_closeness": self.feasible_closeness,
            "feasible_excess": self.feasible_excess,
            "numeric_candidates": dict(sorted(self.numeric_candidates.items())),
            "checks": self.checks,
            "found": len(self.search.found),
            "pruned_counts": dict(sorted(self.search.pruned_counts.items())),
            "pair_counts": dict(sorted(self.search.pair_counts.items())),
            "passed": self.passed,
        }


def verify_star_exclusion(ell: int, cap: int = 8, corpus: Optional[str] = None,
                          n_cap: int = 200) -> StarExclusionReport:
    """Search pinned to one star size, cross-checked against the numeric bounds."""
    if not 0 <= ell <= 8:
        raise PreconditionError("star exclusions are stated for 0 <= ell <= 8")
    if cap > MAX_ENUMERATION_N and corpus is None:
        raise CapExceededError(f"cap {cap} needs a graph6 corpus")
    cfg = SearchConfig(ell, ell, cap, n_cap=n_cap, corpus=corpus)
    result = exotic_search(cfg)

    lower = three_star_lower_bound(ell)
    fc = feasible_closeness(ell)
    # the closeness bound is largest at c = ell + 1
    upper = (ell + 1) ** 2 - 4 * ell
    mc = min_cob_upper_bound(ell)
    if mc is not None:
        upper = min(upper, mc)
    window_empty = upper < lower
    fe = []
    if not window_empty:
        ex = 2
        while (ex + 1) * (ell + 1) + 6 <= upper:
            fe.append(ex)
            ex += 1

    # graphs passing the structural claims whose closeness/excess the bounds still allow
    numeric = {}
    lemma_ok = True
    for g in _source_graphs(cfg):
        inv = connected_components(g)
        if inv[0].is_star:
            continue
        verdict = structural_filters(g)
        if verdict.failed_claims:
            continue
        if verdict.closeness in fc and verdict.excess in fe and max(g.degrees()) <= verdict.closeness // 2:
            uni = uniformity_params(g)
            numeric[to_graph6(g)] = "uniform" if uni.is_uniform else result.eliminated_by.get(
                f"{to_graph6(g)}@{ell}", "accepted")
            if ell == 8 and verdict.closeness == 9:
                vs = [sum(c for _, c in e) for e in close_count_profile(g)]
                if all(v == 9 for v in vs):
                    lemma_ok &= g.n == 6 and set(g.degrees()) == {3} and uni.is_complete_multipartite

    checks = {
        "search-empty": not result.found,
        "exhausted": result.exhausted,
        "accounted": result.accounts_for_everything(),
        "numeric-candidates-eliminated": all(r != "accepted" for r in numeric.values()),
    }
    if ell <= 4:
        checks["small-star-bound-below-lower"] = 7 < lower
    if ell <= 6:
        checks["window-empty"] = window_empty
    if ell == 7:
        checks["closeness-forced-8"] = fc == [8]
        checks["excess-forced-2"] = fe == [2]
    if ell == 8:
        checks["closeness-forced-9"] = fc == [9]
        checks["excess-at-most-3"] = max(fe, default=0) <= 3
        checks["all-close-9-is-cubic-multipartite"] = lemma_ok
    return StarExclusionReport(ell, cap, lower, upper, window_empty, fc, fe, numeric, checks, result)


# ---------------------------------------------------------------------------
# ground truth scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanEntry:
    graph: Graph
    value: Fraction

    def to_dict(self) -> dict:
        return {"graph6": to_graph6(self.graph), "n": self.graph.n, "betweenness": rational_str(self.value)}


def exhaustive_bug_scan(n_max: int) -> List[ScanEntry]:
    """Every connected BUG on at most ``n_max`` vertices with its exact betweenness."""
    if n_max > MAX_ENUMERATION_N:
        raise CapExceededError(f"built-in enumeration stops at n={MAX_ENUMERATION_N}")
    out = []
    for n in range(1, n_max + 1):
        for g in enumerate_connected_graphs(n):
            prof = betweenness_exact(g)
            if prof.is_uniform:
                out.append(ScanEntry(g, prof.average))
    return out


def complement_is_equal_stars(g: Graph) -> bool:
    return connected_components(complement(g)).equal_stars() is not None
