import pytest
from hypothesis import given, strategies as st

from kronsym.distinguishing import distinguishing_number
from kronsym.errors import DomainError, PreconditionViolated
from kronsym.families import (FORMULAS, FormulaResult, MultipartiteSpec, ceil_log,
                              d_complete_multipartite, d_kron_complete, d_kron_complete_bipartite,
                              d_kron_stars, dprime_bipartite_upper, dprime_k2_power,
                              dprime_kron_path_star, dprime_kron_paths, dprime_kron_stars,
                              dprime_kron_upper, int_root_ceil)
from kronsym.graph_core import complete_bipartite_graph
from kronsym.products import kronecker


def test_formula_result_kinds():
    assert FormulaResult("interval", (2, 3)).admits(3)
    assert not FormulaResult("exact", 2).admits(3)
    assert FormulaResult("upper_bound", 3).admits(1)
    assert str(FormulaResult("interval", (2, 3))) == "{2,3}"
    with pytest.raises(ValueError):
        FormulaResult("interval", (2, 4))
    with pytest.raises(ValueError):
        FormulaResult("exact", 0)


@given(st.integers(1, 10**12), st.integers(1, 6))
def test_int_root_ceil(n, k):
    d = int_root_ceil(n, k)
    assert (d - 1) ** k < n <= d ** k


@given(st.integers(1, 10**6), st.integers(2, 9))
def test_ceil_log(k, d):
    e = ceil_log(k, d)
    assert d ** e >= k and (e == 0 or d ** (e - 1) < k)


def test_kron_complete_examples():
    assert d_kron_complete(2, 4) == FormulaResult("exact", 3)
    assert d_kron_complete(2, 3) == FormulaResult("interval", (2, 3))
    assert d_kron_complete(3, 8) == FormulaResult("exact", 3)
    assert d_kron_complete(4, 2) == d_kron_complete(2, 4)
    with pytest.raises(DomainError):
        d_kron_complete(1, 4)


def test_multipartite_examples():
    assert d_complete_multipartite(MultipartiteSpec(((3, 2),))).value == 4
    assert d_complete_multipartite(MultipartiteSpec(((2, 3),))).value == 3
    assert d_complete_multipartite(MultipartiteSpec(((1, 5),))).value == 5
    assert MultipartiteSpec.from_sizes([1, 2, 2]).parts == ((2, 2), (1, 1))
    with pytest.raises(ValueError):
        MultipartiteSpec(((1, 1), (2, 1)))


def test_complete_bipartite_product_examples():
    assert d_kron_complete_bipartite(2, 2, 3, 3).value == 7
    assert d_kron_complete_bipartite(3, 2, 2, 2).value == 6
    with pytest.raises(PreconditionViolated):
        d_kron_complete_bipartite(1, 2, 1, 1)


def test_complete_bipartite_product_smallest_case_disagrees_with_solver():
    # K2 x K2 is two disjoint edges; swapping them survives any 2-labelling
    assert d_kron_complete_bipartite(1, 1, 1, 1).value == 2
    k2 = complete_bipartite_graph(1, 1)
    assert distinguishing_number(kronecker(k2, k2)).value == 3


def test_star_formulas():
    assert d_kron_stars(3, 3).value == 9 and d_kron_stars(3, 4).value == 12
    assert d_kron_stars(4, 3) == d_kron_complete_bipartite(4, 1, 1, 3)
    with pytest.raises(DomainError):
        d_kron_stars(2, 3)
    assert [dprime_kron_stars(*p).value for p in ((3, 3), (4, 3), (5, 5))] == [9, 12, 25]
    with pytest.raises(PreconditionViolated):
        dprime_kron_stars(3, 4)


def test_index_formulas():
    assert [dprime_k2_power(k).value for k in (2, 3, 4)] == [2, 4, 8]
    assert dprime_kron_paths(3, 2).value == 3 and dprime_kron_paths(2, 3).value == 3
    assert dprime_kron_paths(3, 3).value == 4 and dprime_kron_paths(5, 4).value == 2
    assert dprime_kron_paths(2, 2).value == 2
    assert [dprime_kron_path_star(*p).value for p in ((4, 2), (2, 3), (3, 2))] == [2, 4, 4]
    with pytest.raises(DomainError):
        dprime_k2_power(1)


def test_bipartite_upper_bounds():
    assert dprime_bipartite_upper(8, 3) == FormulaResult("upper_bound", 3)
    assert dprime_bipartite_upper(2, 2).value == 3
    assert dprime_bipartite_upper(1, 1).value == 2
    assert dprime_kron_upper(2, 2).value == 3
    assert dprime_kron_upper(1, 2).value == 2
    assert dprime_kron_upper(3, 2).value == 2
    assert not dprime_kron_upper(3, 2).fallback


def test_registry_arity():
    for name, (fn, arity) in FORMULAS.items():
        assert callable(fn)
        assert arity is None or arity >= 1
