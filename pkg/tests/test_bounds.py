from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from indforest.bounds import (
    caro_wei_t,
    ceil_div,
    construct_extremal_lip,
    edges_leaving_path,
    f_ratio,
    lif_regular_lower_bound,
    lip_order_lower_bound,
    lip_upper_bound,
    misc_lower_bounds,
    nordhaus_gaddum_check,
)
from indforest.errors import BadParams
from indforest.graph import (
    complement,
    complete,
    complete_bipartite,
    cycle,
    make_graph,
    path,
    prism,
    regularity,
)
from indforest.enumeration import canonical_form, random_regular
from indforest.solvers import longest_induced_path, max_induced_forest, max_induced_linear_forest, oracle_subset_scan

from oracles import isomorphic


@pytest.mark.parametrize("n", range(1, 9))
def test_t_complete(n):
    assert caro_wei_t(complete(n)) == 1


def test_t_star():
    assert caro_wei_t(complete_bipartite(1, 3)) == Fraction(1, 4) + 3 * Fraction(1, 2) == Fraction(7, 4)


@given(st.sampled_from([(4, 3), (6, 3), (10, 3), (12, 5), (9, 4)]), st.integers(0, 1000))
def test_t_regular(nr, seed):
    n, r = nr
    assert caro_wei_t(random_regular(n, r, seed)) == Fraction(n, r + 1)


def test_f_ratio_examples():
    assert f_ratio(complete_bipartite(2, 3), max_induced_linear_forest(complete_bipartite(2, 3)).value) == 2
    assert f_ratio(complete_bipartite(1, 3), max_induced_linear_forest(complete_bipartite(1, 3)).value) == Fraction(12, 7)
    for n in range(2, 8):
        assert f_ratio(complete(n), 2) == 2


def test_lif_regular_lower_bound():
    assert lif_regular_lower_bound(4, 3) == 2
    assert lif_regular_lower_bound(10, 3) == 5
    assert lif_regular_lower_bound(5, 2) == Fraction(10, 3)
    assert oracle_subset_scan(cycle(5), "linear_forest").value >= Fraction(10, 3)
    with pytest.raises(BadParams):
        lif_regular_lower_bound(4, 4)
    with pytest.raises(BadParams):
        lif_regular_lower_bound(4, 0)


def test_lip_order_lower_bound():
    assert lip_order_lower_bound(3, 3) == 6
    assert lip_order_lower_bound(2, 2) == 3
    assert lip_order_lower_bound(4, 4) == 7
    with pytest.raises(BadParams):
        lip_order_lower_bound(0, 3)


@pytest.mark.parametrize("a, b", [(-4, 3), (-6, 4), (-2, 2), (7, 2), (0, 5), (-1, 7)])
def test_ceil_div_exact(a, b):
    assert ceil_div(a, b) == -(-a // b)
    assert ceil_div(a, b) - 1 < Fraction(a, b) <= ceil_div(a, b)


@given(st.integers(1, 40), st.integers(2, 60))
def test_edges_leaving_path_identity(r, k):
    assert edges_leaving_path(r, k) == r * k - 2 * (k - 1)


def test_edges_leaving_path_needs_two_ends():
    with pytest.raises(BadParams):
        edges_leaving_path(3, 1)


@given(st.integers(1, 12), st.integers(1, 30))
def test_lip_order_lower_bound_parity(r, k):
    n = lip_order_lower_bound(r, k)
    if r % 2:
        assert n % 2 == 0
    # the counting argument: at least rk - 2(k-1) edges need ceil(./r) outside vertices
    assert n >= k + ceil_div(r * k - 2 * (k - 1), r)


def test_lip_upper_bound():
    assert lip_upper_bound(6, 3) == 4
    assert lip_upper_bound(4, 3) == Fraction(10, 4)
    assert lip_upper_bound(10, 3) == 7
    assert longest_induced_path(prism()).value == 4
    assert longest_induced_path(complete(4)).value == 2
    with pytest.raises(BadParams):
        lip_upper_bound(5, 1)


def test_shi_xu_and_punnim():
    shi_xu, punnim = misc_lower_bounds(path(5), a=5)
    assert shi_xu.value == Fraction(30, 9) and shi_xu.holds and shi_xu.applicable
    _, punnim = misc_lower_bounds(complete(4), a=2)
    assert punnim.value == 2 and punnim.holds and punnim.equality


def test_shi_xu_trivial_for_dense_regular():
    g = random_regular(12, 8, 0)
    shi_xu = misc_lower_bounds(g)[0]
    assert shi_xu.value < 0 and shi_xu.trivial
    assert shi_xu.holds is None


def test_bound_applicability():
    disconnected = make_graph(4, [(0, 1)])
    shi_xu, punnim = misc_lower_bounds(disconnected, a=4)
    assert not shi_xu.applicable and shi_xu.holds is None
    assert not punnim.applicable


def test_nordhaus_gaddum_examples():
    p4 = path(4)
    assert isomorphic(complement(p4), p4)
    rep = nordhaus_gaddum_check(p4, max_induced_forest(p4).value, max_induced_forest(complement(p4)).value)
    assert rep.measured == 8 and rep.value == 8 and rep.holds and rep.equality
    k1 = make_graph(1, [])
    assert nordhaus_gaddum_check(k1, 1, 1).measured == 2
    c5 = cycle(5)
    rep = nordhaus_gaddum_check(c5, max_induced_forest(c5).value, max_induced_forest(complement(c5)).value)
    assert rep.measured == 8 and rep.holds and not rep.equality
    k5 = complete(5)
    rep = nordhaus_gaddum_check(k5, max_induced_forest(k5).value, max_induced_forest(complement(k5)).value)
    assert rep.measured == 7 and rep.holds


def test_extremal_r2_is_triangle():
    c = construct_extremal_lip(2)
    assert c.graph == complete(3)
    assert c.lip_value == 2 and c.lip_matches_r


def test_extremal_r4():
    c = construct_extremal_lip(4)
    assert c.graph.n == 7 == lip_order_lower_bound(4, 4)
    assert regularity(c.graph) == 4
    assert c.lip_value == 4 and c.lip_matches_r


def test_extremal_r3_is_prism_with_lip_4():
    c = construct_extremal_lip(3)
    assert canonical_form(c.graph) == canonical_form(prism())
    assert c.lip_value == 4
    assert c.lip_matches_r is False


@pytest.mark.parametrize("r", range(2, 9))
def test_extremal_regular_and_order(r):
    c = construct_extremal_lip(r, solve_lip=False)
    assert regularity(c.graph) == r
    assert c.verified_regular
    assert c.graph.n == lip_order_lower_bound(r, r) == (2 * r - 1 if r % 2 == 0 else 2 * r)
    assert c.parity_case == ("even" if r % 2 == 0 else "odd")


def test_extremal_bad_r():
    with pytest.raises(BadParams):
        construct_extremal_lip(1)
