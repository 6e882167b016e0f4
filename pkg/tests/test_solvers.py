import random
from math import ceil

import pytest
from hypothesis import given, settings, strategies as st

from indforest.bounds import caro_wei_t
from indforest.errors import EmptyGraph, OrderTooLargeForOracle
from indforest.graph import (
    SHAPES,
    complete,
    complete_bipartite,
    cycle,
    make_graph,
    path,
    petersen,
    prism,
    shape_check,
)
from indforest.solvers import (
    BudgetExceeded,
    SearchBudget,
    independence_number,
    longest_induced_path,
    max_induced_forest,
    max_induced_linear_forest,
    oracle_subset_scan,
    solve,
)

from oracles import naive_value


def rand_graph(seed, n_lo=1, n_hi=12):
    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    p = rng.uniform(0.1, 0.9)
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# expected values below were produced by the set-based naive scan in oracles.py
def test_naive_oracle_values():
    assert naive_value(petersen(), "forest") == 7
    assert naive_value(complete_bipartite(3, 3), "linear_forest") == 3
    assert naive_value(complete_bipartite(3, 3), "induced_path") == 3
    assert naive_value(prism(), "induced_path") == 4
    assert naive_value(cycle(6), "linear_forest") == 5


def test_forest_examples():
    assert max_induced_forest(complete(4)).value == 2
    assert max_induced_forest(path(7)).value == 7
    assert max_induced_forest(petersen()).value == 7


@pytest.mark.parametrize("n", range(2, 9))
def test_lif_complete(n):
    assert max_induced_linear_forest(complete(n)).value == 2


def test_lif_examples():
    assert max_induced_linear_forest(complete_bipartite(3, 3)).value == 3
    assert max_induced_linear_forest(cycle(5)).value == 4


def test_lip_examples():
    assert longest_induced_path(complete_bipartite(3, 3)).value == 3
    for n in range(1, 9):
        assert longest_induced_path(path(n)).value == n
    assert longest_induced_path(prism()).value == 4


def test_lip_empty_graph():
    with pytest.raises(EmptyGraph):
        longest_induced_path(make_graph(0, []))
    with pytest.raises(EmptyGraph):
        oracle_subset_scan(make_graph(0, []), "induced_path")


def test_empty_graph_forests():
    g = make_graph(0, [])
    assert max_induced_forest(g).value == 0
    assert oracle_subset_scan(g, "linear_forest").value == 0


def test_oracle_examples():
    assert oracle_subset_scan(complete(4), "forest").value == 2
    assert oracle_subset_scan(cycle(6), "linear_forest").value == 5
    assert oracle_subset_scan(make_graph(1, []), "induced_path").value == 1


def test_oracle_cap():
    with pytest.raises(OrderTooLargeForOracle):
        oracle_subset_scan(path(25), "forest")


def test_lexicographic_witness():
    assert max_induced_forest(complete(4)).witness == (0, 1)
    assert max_induced_linear_forest(cycle(5)).witness == (0, 1, 2, 3)
    assert longest_induced_path(cycle(6)).witness == (0, 1, 2, 3, 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_matches_oracle(seed):
    g = rand_graph(seed)
    for shape in SHAPES:
        fast = solve(g, shape)
        ref = oracle_subset_scan(g, shape)
        assert (fast.value, fast.witness) == (ref.value, ref.witness)
        assert shape_check(g, fast.witness, shape)
    assert longest_induced_path(g, method="subset").value == longest_induced_path(g).value


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_oracle_matches_naive(seed):
    g = rand_graph(seed, 1, 8)
    for shape in SHAPES:
        assert oracle_subset_scan(g, shape).value == naive_value(g, shape)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_chain(seed):
    g = rand_graph(seed, 1, 16)
    lip = longest_induced_path(g).value
    lif = max_induced_linear_forest(g).value
    a = max_induced_forest(g).value
    assert lip <= lif <= a <= g.n


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.data())
def test_adding_edge_never_increases(seed, data):
    g = rand_graph(seed, 2, 12)
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        return
    e = data.draw(st.sampled_from(missing))
    h = make_graph(g.n, g.edges() + [e])
    for shape in ("forest", "linear_forest"):
        assert solve(h, shape).value <= solve(g, shape).value


def test_lip_is_not_edge_monotone():
    # joining two isolated vertices lengthens the longest induced path
    assert longest_induced_path(make_graph(2, [])).value == 1
    assert longest_induced_path(make_graph(2, [(0, 1)])).value == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_caro_wei_floor(seed):
    g = rand_graph(seed)
    alpha = independence_number(g).value
    assert max_induced_linear_forest(g).value >= alpha >= ceil(caro_wei_t(g))


def test_budget_flags_incomplete():
    res = max_induced_forest(petersen(), SearchBudget(node_limit=5))
    assert not res.optimal
    assert res.value <= 7
    assert shape_check(petersen(), res.witness, "forest")
    with pytest.raises(BudgetExceeded) as info:
        res.require_optimal()
    assert info.value.result is res
    full = max_induced_forest(petersen(), SearchBudget(node_limit=10**6))
    assert full.optimal and full.require_optimal() is full


def test_time_budget():
    res = longest_induced_path(cycle(40), SearchBudget(time_limit=0.0))
    assert res.value >= 1


def test_deterministic():
    g = rand_graph(7, 10, 14)
    assert max_induced_forest(g).witness == max_induced_forest(g).witness
