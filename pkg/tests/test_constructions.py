from fractions import Fraction

import pytest

from bugscope.centrality import betweenness_exact
from bugscope.certify import is_cobug
from bugscope.constructions import (
    above_one_parameters,
    build,
    cycles_cobug,
    family_above_one,
    inflated_cycles_cobug,
    multipartite_plus_stars,
    stars_cobug,
)
from bugscope.errors import PreconditionError
from bugscope.graph import complement

F = Fraction


@pytest.mark.parametrize("k,ell,value", [(2, 1, F(1, 2)), (3, 0, F(0)), (2, 3, F(3, 4))])
def test_stars(k, ell, value):
    c = stars_cobug(k, ell)
    assert c.predicted_betweenness == value
    rep = is_cobug(c.graph)
    assert rep.is_cobug and rep.betweenness_value == value and not rep.exotic


def test_stars_errors():
    with pytest.raises(PreconditionError):
        stars_cobug(1, 3)


@pytest.mark.parametrize("lengths", [[4, 4], [5, 7], [4, 4, 4]])
def test_cycles(lengths):
    c = cycles_cobug(lengths)
    rep = is_cobug(c.graph)
    assert rep.is_cobug and rep.betweenness_value == 1 == c.predicted_betweenness
    assert rep.co_betweenness == F(4, c.graph.n - 4)


def test_cycles_errors():
    with pytest.raises(PreconditionError):
        cycles_cobug([3, 5])
    with pytest.raises(PreconditionError):
        cycles_cobug([6])


@pytest.mark.parametrize("parts,n", [([1, 1, 2], 9), ([2, 3], 11), ([3, 3], 33)])
def test_multipartite(parts, n):
    c = multipartite_plus_stars(parts)
    assert c.graph.n == n
    rep = is_cobug(c.graph)
    assert rep.is_cobug and rep.betweenness_value == 1 and not rep.exotic


def test_multipartite_errors():
    with pytest.raises(PreconditionError, match="more edges than vertices"):
        multipartite_plus_stars([1, 2])


def test_direct_agrees_for_small_stars_and_cycles():
    cases = [stars_cobug(k, ell).graph for k in (2, 3, 4) for ell in (0, 1, 2, 4, 6) if k * (ell + 1) <= 60]
    cases += [cycles_cobug(ls).graph for ls in ([4, 4], [5, 7], [4, 4, 4], [6, 9, 10], [20, 30])]
    for g in cases:
        rep = is_cobug(g)
        prof = betweenness_exact(complement(g))
        assert prof.is_uniform == rep.is_cobug
        assert prof.average == rep.betweenness_value


def test_above_one():
    p = above_one_parameters(2)
    assert p == {"k": 7, "ell": 15, "b": 3, "c": 4}
    c = family_above_one(2)
    assert (c.graph.n, c.graph.m) == (136, 153)
    rep = is_cobug(c.graph)
    assert rep.is_cobug and rep.betweenness_value == F(9, 8)
    c3 = family_above_one(3)
    assert c3.graph.n == 16 * 81 - 16 * 27 + 12
    rep = is_cobug(c3.graph)
    assert rep.is_cobug and rep.betweenness_value == F(13, 12)
    assert rep.co_betweenness == F(1, 4 * 9 - 4 * 3)
    values = [family_above_one(t).predicted_betweenness for t in range(2, 8)]
    assert all(v > 1 for v in values) and values == sorted(values, reverse=True)
    with pytest.raises(PreconditionError):
        family_above_one(1)


def test_inflated_errors():
    with pytest.raises(PreconditionError):
        inflated_cycles_cobug([700])
    with pytest.raises(PreconditionError):
        inflated_cycles_cobug([3, 718])


def test_inflated_sizes():
    c = inflated_cycles_cobug()
    assert (c.graph.n, c.graph.m) == (337392, 1096524)
    assert c.predicted_betweenness == F(13, 4)


def test_build_dispatch():
    assert build("stars", [3, 2]).graph.n == 9
    assert build("cycles", [4, 5]).graph.n == 9
    assert build("multipartite", [1, 1, 2]).graph.n == 9
    assert build("above-one", [2]).graph.n == 136
    with pytest.raises(PreconditionError):
        build("wheels", [5])
    with pytest.raises(PreconditionError):
        build("stars", [3])


@pytest.mark.slow
def test_inflated_mixed_cycle_lengths():
    c = inflated_cycles_cobug([4, 717])
    rep = is_cobug(c.graph, with_structure=False)
    assert rep.is_cobug and rep.betweenness_value == F(13, 4)
    assert rep.co_betweenness == F(3924, 333467)
