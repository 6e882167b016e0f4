import random
from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, settings, strategies as st

from indforest.enumeration import random_regular
from indforest.errors import ClaimViolated, EmptyGraph, FuelExhausted
from indforest.graph import complete, complete_bipartite, cycle, make_graph, path, petersen, shape_check
from indforest.graphio import decode_graph6
from indforest.greedy import addable, greedy_partition, verify_claims
from indforest.solvers import max_induced_linear_forest

# A 6-regular graph on 23 vertices (random_regular(23, 6, 74)).  After a
# restart swap the promoted first part is no longer maximal: vertex 6 of the
# second part has a single neighbour in the first part and could be added.
CROSS_DEGREE_COUNTEREXAMPLE = "V??_XP`CKSKEsCPOOaUo?@aswC?gQDAGbA?eAWHOcqC?"


def check_partition(g, res):
    masks = res.masks
    union = 0
    for m in masks:
        assert union & m == 0
        union |= m
        assert shape_check(g, m, "linear_forest")
    assert union == g.full
    sizes = [len(p) for p in res.parts]
    assert sizes == sorted(sizes, reverse=True)


def test_k4():
    res = greedy_partition(complete(4))
    assert res.bound == 2
    assert len(res.certified) >= 2
    check_partition(complete(4), res)


def test_perfect_matching_single_part():
    g = make_graph(6, [(0, 1), (2, 3), (4, 5)])
    res = greedy_partition(g)
    assert res.parts == ((0, 1, 2, 3, 4, 5),)
    assert res.bound == 6


def test_c6():
    res = greedy_partition(cycle(6))
    assert res.bound == 4
    assert len(res.certified) >= 4
    assert len(res.certified) <= max_induced_linear_forest(cycle(6)).value == 5


def test_swap_rule_on_star():
    # 1-0-2 grows first; leaf 3 hangs off the interior vertex 0 and replaces it
    res = greedy_partition(complete_bipartite(1, 3))
    assert res.parts == ((1, 2, 3), (0,))
    assert res.steps == 5
    assert res.bound is None


def test_addable_cases():
    g = make_graph(9, [(0, 1), (1, 2), (1, 3), (0, 4), (2, 4), (2, 5), (1, 7), (6, 7), (0, 8), (1, 8)])
    path012 = 0b111
    assert not addable(g, path012, 3)  # interior vertex would reach degree 3
    assert not addable(g, path012, 4)  # joins both ends of one path
    assert addable(g, path012, 5)
    edge_and_point = 0b1000011  # path 0-1 plus isolated 6
    assert addable(g, edge_and_point, 7)  # links two different paths
    assert not addable(g, edge_and_point, 8)  # triangle


def test_empty_graph():
    with pytest.raises(EmptyGraph):
        greedy_partition(make_graph(0, []))


def test_edgeless_has_no_certificate():
    res = greedy_partition(make_graph(3, []))
    assert res.parts == ((0, 1, 2),)
    assert res.bound is None


def test_fuel_exhausted():
    with pytest.raises(FuelExhausted):
        greedy_partition(petersen(), fuel=3)


def test_non_regular_partition():
    g = path(5)
    res = greedy_partition(g)
    assert res.bound is None and res.certificate_holds is None
    check_partition(g, res)


def test_claims_k4():
    g = complete(4)
    rep = verify_claims(g, greedy_partition(g))
    assert rep.ok and all(d >= 2 for d in rep.cross_degrees.values())
    assert not rep.pendant_checked


def test_claims_c5():
    g = cycle(5)
    res = greedy_partition(g)
    assert res.parts == ((0, 1, 2, 3), (4,))
    rep = verify_claims(g, res)
    assert rep.ok and rep.pendant_checked
    assert rep.cross_degrees == {(4, 1, 0): 2}


def test_claims_matching_vacuous():
    g = make_graph(4, [(0, 1), (2, 3)])
    rep = verify_claims(g, greedy_partition(g))
    assert rep.ok and rep.cross_degrees == {}


def test_cross_degree_counterexample_after_restart():
    g = decode_graph6(CROSS_DEGREE_COUNTEREXAMPLE)
    assert g == random_regular(23, 6, 74)
    res = greedy_partition(g)
    check_partition(g, res)
    assert res.certificate_holds
    with pytest.raises(ClaimViolated) as info:
        verify_claims(g, res)
    assert (info.value.vertex, info.value.part, info.value.earlier) == (6, 1, 0)
    assert addable(g, res.masks[0], 6)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10**9))
def test_bound_on_random_regular(r, seed):
    rng = random.Random(seed)
    n = rng.choice([n for n in range(r + 1, 30) if n * r % 2 == 0])
    g = random_regular(n, r, seed)
    res = greedy_partition(g, check=True)
    check_partition(g, res)
    assert res.bound == Fraction(2 * n, r + 1)
    assert len(res.certified) >= ceil(res.bound)
    assert res.steps <= n ** 3 * (r + 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10**9))
def test_certified_not_above_exact(r, seed):
    rng = random.Random(seed)
    n = rng.choice([n for n in range(r + 1, 15) if n * r % 2 == 0])
    g = random_regular(n, r, seed)
    assert len(greedy_partition(g).certified) <= max_induced_linear_forest(g).value


def test_deterministic():
    g = random_regular(20, 4, 3)
    assert greedy_partition(g) == greedy_partition(g)
