from fractions import Fraction

import pytest

from bugscope.cobetweenness import (
    close_count_profile,
    close_inclusion_violation,
    closeness_tables,
    co_betweenness_all,
    co_betweenness_from_tables,
    edge_weight,
    weight_identity_check,
)
from bugscope.constructions import inflated_cycles_cobug
from bugscope.enumeration import enumerate_connected_graphs, enumerate_graphs
from bugscope.errors import PreconditionError, UndefinedWeightError
from bugscope.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)

from conftest import random_connected_graph

F = Fraction


def test_tables_examples():
    t = closeness_tables(cycle_graph(7))
    assert {len(c) for c in t.close_of_edge.values()} == {4}
    assert {len(c) for c in t.close_of_vertex} == {4}
    t = closeness_tables(cycle_graph(3))
    assert {len(c) for c in t.close_of_edge.values()} == {3}
    assert {len(c) for c in t.close_of_vertex} == {3}
    t = closeness_tables(star_graph(5))
    assert t.close_of_vertex[3] == frozenset(star_graph(5).edges)


def test_membership_symmetry(rng):
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 12), 0.3)
        t = closeness_tables(g)
        for e, cl in t.close_of_edge.items():
            assert set(e) <= cl
            for v in range(g.n):
                assert (v in cl) == (e in t.close_of_vertex[v])


def test_edge_weight_examples():
    host = disjoint_union(cycle_graph(5), cycle_graph(6))
    t = closeness_tables(host)
    assert edge_weight(t, (0, 1)) == F(1, host.n - 4)
    t = closeness_tables(star_graph(3))
    with pytest.raises(UndefinedWeightError):
        edge_weight(t, (0, 1))


def test_inflation_weight_first_type():
    g = inflated_cycles_cobug().graph
    wc = co_betweenness_all(g)
    assert wc.weight((0, 1)) == F(1, 337311)  # inside one blob, close to three blobs
    assert wc.weight((0, 27)) == F(1, 337392 - 108)  # between adjacent blobs
    assert set(wc.co_betweenness) == {F(3924, 333467)}


def test_co_betweenness_examples():
    host = disjoint_union(cycle_graph(4), cycle_graph(5), cycle_graph(7))
    assert set(co_betweenness_all(host).co_betweenness) == {F(4, host.n - 4)}
    for k, ell in [(2, 1), (3, 4), (5, 2)]:
        host = disjoint_union(*[star_graph(ell)] * k)
        assert set(co_betweenness_all(host).co_betweenness) == {F(ell, host.n - ell - 1)}


def test_counting_route_matches_materialised_route(rng):
    for n in range(1, 7):
        for h in enumerate_graphs(n):
            for n_total in (h.n + 3, h.n + 10):
                wc = co_betweenness_all(h, n_total)
                assert wc.co_betweenness == co_betweenness_from_tables(closeness_tables(h, n_total))
    for _ in range(30):
        h = random_connected_graph(rng, rng.randint(5, 25), 0.2)
        t = closeness_tables(h, h.n + 7)
        assert co_betweenness_all(h, h.n + 7).co_betweenness == co_betweenness_from_tables(t)


def test_weighted_complement_invariants(rng):
    for _ in range(20):
        h = random_connected_graph(rng, rng.randint(3, 15), 0.3)
        wc = co_betweenness_all(h, h.n + 5)
        assert all(w > 0 for w in wc.weights.values())
        assert all(c <= wc.total_weight for c in wc.co_betweenness)
        assert sum(wc.weights.values()) == wc.total_weight


def test_weight_identity_examples():
    assert weight_identity_check(cycle_graph(4))
    assert weight_identity_check(complete_graph(5))
    assert weight_identity_check(petersen_graph())
    with pytest.raises(PreconditionError):
        weight_identity_check(path_graph(4))


def test_weight_identity_exhaustive_small():
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            if diameter(g) <= 2:
                assert weight_identity_check(g)


def test_close_inclusion_examples():
    # K_5 minus an edge is complete multipartite: every close set is all of E
    k5e = complement(disjoint_union(complete_graph(2), complete_graph(1), complete_graph(1), complete_graph(1)))
    assert close_inclusion_violation(k5e) is None
    # a pendant vertex sees only the edges at its neighbour
    pendant = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (0, 3)])
    x, y = close_inclusion_violation(pendant)
    assert closeness_tables(pendant).close_of_vertex[x] < closeness_tables(pendant).close_of_vertex[y]
    assert close_inclusion_violation(cycle_graph(5)) is None
    # P_3: leaf and centre have equal close sets, so no strict inclusion
    assert close_inclusion_violation(path_graph(3)) is None
    x, y = close_inclusion_violation(path_graph(4))
    assert {x, y} in ({0, 1}, {2, 3}, {0, 2}, {1, 3})


def test_profile_shape():
    prof = close_count_profile(cycle_graph(6))
    assert set(prof) == {((4, 4),)}
