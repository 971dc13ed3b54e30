import pytest
from hypothesis import given, settings, strategies as st

from incwtree.assoc import ass_infinity, ass_power, astab, is_associated
from incwtree.covers import enumerate_vertex_covers
from incwtree.errors import InvalidPower, NotACover, NotIncreasingTree, TrivialTree
from incwtree.oracle import associated_primes, edge_ideal, ideal_power
from conftest import path_graph
from strategies import increasing_trees


def test_is_associated_examples(P4):
    C = ["x1", "x2", "x3"]
    assert not is_associated(P4, C, 1)
    assert is_associated(P4, C, 2)
    assert is_associated(P4, ["x2", "x3"], 1)
    for t in range(1, 6):
        assert not is_associated(P4, P4.vertices, t)


def test_is_associated_errors(P4, P5):
    with pytest.raises(NotIncreasingTree):
        is_associated(P5, ["x2", "x4"], 1)
    with pytest.raises(NotACover):
        is_associated(P4, ["x1"], 1)
    with pytest.raises(InvalidPower):
        is_associated(P4, ["x2", "x3"], 0)


def test_ass_power_examples(P4, E2, trivial):
    minimal = (("x1", "x3"), ("x2", "x3"), ("x2", "x4"))
    assert ass_power(P4, 1).primes == minimal
    assert ass_power(P4, 2).primes == minimal + (("x1", "x2", "x3"),)
    assert ass_power(E2, 5).primes == (("x1",), ("x2",))
    assert ass_power(trivial, 3).primes == ()


def test_ass_power_cross_checked_by_oracle(P4, E2):
    for G, t in ((P4, 1), (P4, 2), (E2, 5)):
        assert set(ass_power(G, t).primes) == set(associated_primes(ideal_power(edge_ideal(G), t)))


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_astab_path_family(n):
    G = path_graph(*([1] * (n - 2) + [2]))
    report = astab(G)
    assert report.astab == n - 2
    top = tuple(f"x{i + 1}" for i in range(n - 1))
    assert report.per_cover[top] == n - 2


def test_astab_single_edge(E2):
    report = astab(E2)
    assert report.astab == 1
    assert report.ass_infinity == (("x1",), ("x2",))
    assert ass_infinity(E2) == report.ass_infinity


def test_astab_trivial_tree(trivial):
    with pytest.raises(TrivialTree):
        astab(trivial)


@given(increasing_trees(max_n=8))
def test_chain_and_stabilization(G):
    report = astab(G)
    k = report.astab
    sets = [set(ass_power(G, t).primes) for t in range(1, k + 3)]
    for a, b in zip(sets, sets[1:]):
        assert a <= b
    assert sets[k - 1] == sets[k] == sets[k + 1] == set(report.ass_infinity)
    if k >= 2:
        assert sets[k - 2] != set(report.ass_infinity)
    assert report.astab == max(report.per_cover.values())


@given(increasing_trees(max_n=8), st.integers(1, 6))
def test_minimal_primes_persist_and_maximal_excluded(G, t):
    primes = set(ass_power(G, t).primes)
    assert set(enumerate_vertex_covers(G, minimal_only=True)) <= primes
    assert G.vertices not in primes


@settings(max_examples=40, deadline=None)
@given(increasing_trees(max_n=6, wmax=3), st.integers(1, 3))
def test_formula_matches_oracle(G, t):
    assert set(ass_power(G, t).primes) == set(associated_primes(ideal_power(edge_ideal(G), t)))
