from itertools import combinations_with_replacement

import pytest

from kronsym.errors import NotBooleanSquareEdge
from kronsym.generators import connected_graphs
from kronsym.graph_core import (are_isomorphic, complete_graph, cycle_graph, has_isolated_vertex,
                                is_r_thin, path_graph, paw_graph, relabel)
from kronsym.products import cartesian, kronecker
from kronsym.skeleton import boolean_square, cartesian_skeleton, is_dispensable
from kronsym.symmetry import automorphism_group, is_automorphism


def test_boolean_square_examples():
    sq = boolean_square(complete_graph(2))
    assert sq.base.m == 0 and sq.loop_vertices == {0, 1}
    sq = boolean_square(path_graph(3))
    assert sq.base.edges == [(0, 2)] and sq.loop_vertices == {0, 1, 2}
    c5 = cycle_graph(5)
    assert boolean_square(c5).base.edges == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]


def test_dispensable_examples():
    assert is_dispensable(cycle_graph(5), 1, 1)
    assert not is_dispensable(cycle_graph(5), 0, 2)
    assert not is_dispensable(path_graph(3), 0, 2)
    with pytest.raises(NotBooleanSquareEdge):
        is_dispensable(cycle_graph(5), 0, 1)


def test_skeleton_examples():
    assert cartesian_skeleton(complete_graph(2)).m == 0
    s = cartesian_skeleton(cycle_graph(5))
    assert are_isomorphic(s, cycle_graph(5))
    paw = paw_graph()
    assert are_isomorphic(cartesian_skeleton(kronecker(paw, paw)),
                          cartesian(cartesian_skeleton(paw), cartesian_skeleton(paw)))


def _thin_pool():
    pool = [g for n in range(2, 6) for g in connected_graphs(n)
            if is_r_thin(g) and not has_isolated_vertex(g)]
    return pool + [cycle_graph(6), cycle_graph(7), paw_graph()]


def test_product_identity_is_exact():
    pool = _thin_pool()
    pairs = list(combinations_with_replacement(range(len(pool)), 2))
    assert len(pairs) >= 20
    for a, b in pairs:
        h, k = pool[a], pool[b]
        assert cartesian_skeleton(kronecker(h, k)).edges == \
            cartesian(cartesian_skeleton(h), cartesian_skeleton(k)).edges


def test_isomorphisms_transfer():
    for g in _thin_pool():
        perm = list(reversed(range(g.n)))
        assert cartesian_skeleton(relabel(g, perm)) == relabel(cartesian_skeleton(g), perm)
        s = cartesian_skeleton(g)
        assert all(is_automorphism(s, p) for p in automorphism_group(g).generators)
