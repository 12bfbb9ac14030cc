import warnings

import pytest
from hypothesis import given

from conftest import graphs
from kronsym.errors import InvalidPower, NotBipartite
from kronsym.graph_core import (are_isomorphic, complement, complete_graph, connected_components,
                                cycle_graph, disjoint_union, path_graph, star_graph)
from kronsym.products import (DisconnectedFactorWarning, ProductVertexMap, bipartite_split, cartesian,
                              kronecker, kronecker_component_count, kronecker_is_connected,
                              product_power)


def test_vertex_map_round_trip():
    vm = ProductVertexMap((3, 4, 2))
    assert vm.size == 24
    assert vm.flatten((1, 2, 1)) == 1 * 8 + 2 * 2 + 1
    assert all(vm.flatten(vm.unflatten(i)) == i for i in range(24))
    with pytest.raises(IndexError):
        vm.flatten((3, 0, 0))


def test_small_products():
    k2 = complete_graph(2)
    assert are_isomorphic(kronecker(k2, k2), disjoint_union(k2, k2))
    assert are_isomorphic(kronecker(k2, complete_graph(3)), cycle_graph(6))
    p3 = path_graph(3)
    assert are_isomorphic(kronecker(p3, path_graph(2)), disjoint_union(p3, p3))
    assert are_isomorphic(kronecker(p3, p3), disjoint_union(star_graph(4), cycle_graph(4)))
    assert cartesian(k2, k2) == cycle_graph(4) or are_isomorphic(cartesian(k2, k2), cycle_graph(4))


def test_complete_kronecker_is_complement_of_cartesian():
    for k in range(2, 6):
        for n in range(2, 6):
            kk, kn = complete_graph(k), complete_graph(n)
            assert kronecker(kk, kn) == complement(cartesian(kk, kn))


def test_k2_powers():
    for k in (2, 3, 4):
        x = product_power("kronecker", complete_graph(2), k)
        assert x.n == 2 ** k and x.m == 2 ** (k - 1)
        assert len(connected_components(x)) == 2 ** (k - 1)
    assert product_power("cart", complete_graph(2), 3).m == 12
    with pytest.raises(InvalidPower):
        product_power("kron", complete_graph(2), 0)


@given(graphs(max_n=4), graphs(max_n=4))
def test_product_sizes(g, h):
    assert kronecker(g, h).m == 2 * g.m * h.m
    assert cartesian(g, h).m == g.n * h.m + h.n * g.m


@given(graphs(max_n=4), graphs(max_n=4))
def test_kronecker_commutes(g, h):
    assert are_isomorphic(kronecker(g, h), kronecker(h, g))


@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5))
def test_connectivity_predicate(g, h):
    x = kronecker(g, h)
    assert kronecker_is_connected(g, h) == (x.n > 0 and len(connected_components(x)) == 1)
    count = kronecker_component_count(g, h)
    if count is not None:
        assert len(connected_components(x)) == count


def test_bipartite_split_sizes():
    from kronsym.graph_core import complete_bipartite_graph
    g, h = complete_bipartite_graph(3, 2), complete_bipartite_graph(1, 3)
    split = bipartite_split(g, h)
    assert sorted(split.sizes()) == sorted([3 * 1 + 2 * 3, 3 * 3 + 2 * 1])
    assert split.as_sets() == connected_components(kronecker(g, h)).as_sets()


def test_bipartite_split_errors():
    with pytest.raises(NotBipartite):
        bipartite_split(cycle_graph(5), path_graph(2))
    with pytest.warns(DisconnectedFactorWarning):
        bipartite_split(disjoint_union(path_graph(2), path_graph(2)), path_graph(2))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        bipartite_split(path_graph(3), path_graph(2))
