from fractions import Fraction

import pytest

from bugscope.certify import is_cobug
from bugscope.enumeration import canonical_form
from bugscope.errors import CapExceededError, PreconditionError
from bugscope.graph import Graph, complete_bipartite, complement, cycle_graph, diameter
from bugscope.io import to_graph6, write_graph6_file
from bugscope.search import (
    SearchConfig,
    candidate_components,
    complement_is_equal_stars,
    exhaustive_bug_scan,
    exotic_search,
    feasible_closeness,
    min_cob_upper_bound,
    n_window,
    screen,
    three_star_lower_bound,
    verify_star_exclusion,
)

F = Fraction


def test_config_validation():
    with pytest.raises(PreconditionError):
        SearchConfig(ell_min=3, ell_max=2)
    with pytest.raises(PreconditionError):
        SearchConfig(max_nonstar_components=3)


def test_candidates_below_six_vertices_are_empty():
    assert list(candidate_components(SearchConfig(component_vertex_cap=5))) == []


def test_screen_examples():
    assert screen(cycle_graph(6)) in {"uniform", "c4c5-adjacent-deg2", "path-of-three-deg2"}
    assert screen(complete_bipartite(2, 4)) == "uniform"
    assert screen(Graph(3, [(0, 1), (1, 2)])) == "star"


def test_candidates_are_filtered_and_non_uniform():
    for g in candidate_components(SearchConfig(component_vertex_cap=7)):
        assert g.n >= 6 and min(g.degrees()) >= 2 and g.m - g.n >= 2


@pytest.fixture(scope="module")
def full_search():
    return exotic_search(SearchConfig(0, 8, 8))


def test_main_search_empty_and_accounted(full_search):
    r = full_search
    assert r.found == [] and r.exhausted
    assert r.accounts_for_everything()
    assert r.enumerated == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117


def test_search_hits_respect_divisibility_and_three_stars():
    cfg = SearchConfig(0, 8, 7, low_betweenness_only=False, n_cap=60)
    r = exotic_search(cfg)
    assert r.accounts_for_everything()
    for hit in r.cobugs:
        comps_n = sum(1 for _ in hit.components)
        t_total = hit.n - hit.stars * (hit.ell + 1)
        assert (hit.n - t_total) % (hit.ell + 1) == 0 and comps_n == 1
        assert is_cobug(hit.graph()).is_cobug
    for hit in r.found:
        assert hit.stars >= 3 and is_cobug(hit.graph()).exotic


def test_betweenness_one_regime_finds_remark_example():
    r = exotic_search(SearchConfig(4, 4, 4, low_betweenness_only=False, n_cap=30))
    k4e = to_graph6(canonical_form(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])))
    hits = [h for h in r.cobugs if h.components == (k4e,)]
    assert [(h.n, h.stars) for h in hits] == [(9, 1)]
    assert hits[0].report.betweenness_value == 1 and not hits[0].report.exotic
    assert r.found == []


def test_window_formula():
    from bugscope.search import Candidate

    c = Candidate(complete_bipartite(3, 3), (), 9)
    cfg = SearchConfig()
    assert n_window(8, (c,), cfg) == (3 * 9 + 6, 49)
    assert n_window(9, (c,), cfg) == (3 * 10 + 6, 200)


def test_star_exclusion_bounds():
    assert [min_cob_upper_bound(ell) for ell in range(6)] == [1, 1, 2, 4, 7, 16]
    assert min_cob_upper_bound(6) is None
    assert three_star_lower_bound(5) == 24 and three_star_lower_bound(6) == 27
    assert feasible_closeness(7) == [8]
    assert feasible_closeness(8) == [9]


@pytest.mark.parametrize("ell", range(9))
def test_star_exclusions(ell):
    rep = verify_star_exclusion(ell)
    assert rep.passed, rep.checks
    if ell == 5:
        assert rep.upper_n == 16 and rep.lower_n == 24
    if ell == 6:
        assert rep.upper_n == 25 and rep.lower_n == 27
    if ell == 7:
        assert rep.feasible_closeness == [8] and rep.feasible_excess == [2]
        assert rep.numeric_candidates["E?~o"] == "uniform"  # K_{2,4}
        assert all(v != "accepted" for v in rep.numeric_candidates.values())


def test_star_exclusion_limits():
    with pytest.raises(PreconditionError):
        verify_star_exclusion(9)
    with pytest.raises(CapExceededError):
        verify_star_exclusion(3, cap=9)


def test_corpus_extends_candidates(tmp_path):
    path = tmp_path / "nine.g6"
    petersen_minus = Graph(9, [(i, (i + 1) % 9) for i in range(9)] + [(0, 4), (2, 6), (5, 8)])
    write_graph6_file(path, [petersen_minus, petersen_minus])
    cfg = SearchConfig(0, 2, 9, corpus=str(path))
    r = exotic_search(cfg)
    assert r.exhausted and r.enumerated == 12113 + 1 and r.found == []
    assert not exotic_search(SearchConfig(0, 0, 9)).exhausted


def test_bug_scan():
    scan = exhaustive_bug_scan(7)
    values = {e.value for e in scan}
    assert all(not (0 < v < F(1, 2)) for v in values)
    for e in scan:
        if e.value == 0:
            assert e.graph.m == e.graph.n * (e.graph.n - 1) // 2
        if diameter(e.graph) >= 3:
            assert e.value >= 1
        if 0 < e.value < 1:
            assert complement_is_equal_stars(e.graph)
    assert sum(1 for e in scan if e.value == 0) == 7
    with pytest.raises(CapExceededError):
        exhaustive_bug_scan(9)
