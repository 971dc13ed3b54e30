from itertools import product

import pytest
from hypothesis import given, strategies as st

import bruteforce
from incwtree import graph as wg
from incwtree.covers import (
    analyze_cover,
    build_G_S,
    decompose,
    enumerate_vertex_covers,
    is_independent,
    is_minimal_cover,
    is_strong_cover_by_definition,
    is_vertex_cover,
    neighborhood,
    nu,
    special_vertices_by_definition,
)
from incwtree.errors import (
    NotACover,
    NotIncreasingTree,
    NotIndependent,
    NotInNeighborhood,
    TooManyVertices,
)
from incwtree.generate import reweighted, tree_shapes
from incwtree.graph import build_graph
from incwtree.increasing import RootedIncreasingTree, is_increasing_tree
from strategies import increasing_trees, trees


def test_minimal_covers_p4(P4):
    got = enumerate_vertex_covers(P4, minimal_only=True)
    assert got == [("x1", "x3"), ("x2", "x3"), ("x2", "x4")]
    assert [set(c) for c in got] == bruteforce.covers(P4, minimal_only=True)


def test_all_covers(P4, E2):
    assert enumerate_vertex_covers(E2) == [("x1",), ("x2",), ("x1", "x2")]
    got = enumerate_vertex_covers(P4)
    assert sorted(map(frozenset, got), key=sorted) == sorted(map(frozenset, bruteforce.covers(P4)), key=sorted)
    assert got[-1] == P4.vertices


def test_cover_test(P4):
    assert not is_vertex_cover(P4, ["x1", "x4"])
    assert is_vertex_cover(P4, ["x2", "x3"])


def test_enumeration_guard():
    vs = [f"v{i}" for i in range(25)]
    G = build_graph(vs, [(vs[i], vs[i + 1], 1) for i in range(24)])
    with pytest.raises(TooManyVertices):
        enumerate_vertex_covers(G)


def test_nu(P4, STAR):
    assert nu(P4, ["x4"], "x3") == 2
    assert nu(P4, ["x3"], "x2") == 1
    assert nu(STAR, ["a", "b"], "v") == 1
    with pytest.raises(NotIndependent):
        nu(P4, ["x1", "x2"], "x3")
    with pytest.raises(NotInNeighborhood):
        nu(P4, ["x4"], "x1")


def test_build_G_S(P4):
    GS = build_G_S(P4, ["x4"])
    assert GS.vertices == ("x1", "x2", "x3")
    assert GS.edges == (("x1", "x2", 1), ("x2", "x3", 1))
    GS = build_G_S(P4, ["x1"])
    assert GS.vertices == ("x2", "x3", "x4")
    assert GS.edges == (("x3", "x4", 2),)
    assert build_G_S(P4, []) == P4


def test_build_G_S_checks_both_endpoints():
    # edge b-c is heavy at c only: nu(c) = 1 while nu is undefined at b
    G = build_graph(["a", "b", "c", "d"], [("a", "b", 1), ("b", "c", 2), ("c", "d", 1)])
    GS = build_G_S(G, ["d"])
    assert GS.edges == (("a", "b", 1),)


def test_decompose(P4, E2):
    comps = decompose(P4, ["x4"])
    assert [(c.subtree.vertices, c.root) for c in comps] == [(("x1", "x2", "x3"), "x3")]
    comps = decompose(P4, ["x1"])
    assert [(c.subtree.vertices, c.root) for c in comps] == [(("x2",), "x2"), (("x3", "x4"), None)]
    comps = decompose(E2, [])
    assert [(c.subtree.vertices, c.root) for c in comps] == [(("x1", "x2"), None)]


def test_decompose_requires_increasing(P5):
    with pytest.raises(NotIncreasingTree):
        decompose(P5, ["x1"])


def test_analyze_cover_examples(P4):
    r = analyze_cover(P4, ["x1", "x2", "x3"])
    assert r.strong and r.special == ("x2",) and r.s == 1
    assert r.complement == ("x4",) and r.neighborhood == ("x3",) and r.nu == {"x3": 2}
    r = analyze_cover(P4, ["x2", "x3", "x4"])
    assert not r.strong
    assert [c.root for c in r.components] == ["x2", None]
    r = analyze_cover(P4, ["x2", "x3"])
    assert r.strong and r.minimal and r.s == 0
    r = analyze_cover(P4, P4.vertices)
    assert r.full_cover and not r.strong and r.s == 0
    with pytest.raises(NotACover):
        analyze_cover(P4, ["x1", "x4"])


def test_strong_by_definition_examples(P4):
    assert is_strong_cover_by_definition(P4, ["x1", "x2", "x3"])
    assert not is_strong_cover_by_definition(P4, ["x1", "x2", "x4"])
    for C in enumerate_vertex_covers(P4, minimal_only=True):
        assert is_strong_cover_by_definition(P4, C)
    assert not is_strong_cover_by_definition(P4, P4.vertices)


def _increasing_trees_upto(n_max, weights):
    for n in range(2, n_max + 1):
        for shape in tree_shapes(n):
            for ws in product(weights, repeat=n - 1):
                G = reweighted(shape, ws)
                if is_increasing_tree(G):
                    yield G


def test_component_criterion_matches_definition_exhaustively():
    # all increasing trees with n <= 7, weights <= 3, up to isomorphism
    count = 0
    for G in _increasing_trees_upto(7, (1, 2, 3)):
        for C in enumerate_vertex_covers(G):
            r = analyze_cover(G, C)
            assert r.strong == is_strong_cover_by_definition(G, C), (G, C)
            if r.strong:
                assert r.special == special_vertices_by_definition(G, C), (G, C)
            count += 1
    assert count > 100_000


@given(increasing_trees(max_n=7))
def test_components_have_at_most_one_root(G):
    for C in enumerate_vertex_covers(G):
        S = [u for u in G.vertices if u not in C]
        nbhd = set(neighborhood(G, S))
        GS = build_G_S(G, S)
        # N(S) is independent in G_S
        assert not any(u in nbhd and v in nbhd for u, v, _ in GS.edges)
        for comp in decompose(G, S):
            assert len(set(comp.subtree.vertices) & nbhd) == (comp.root is not None)
            if comp.root is not None:
                RootedIncreasingTree(comp.subtree, comp.root)


@given(increasing_trees(max_n=7))
def test_minimal_covers_are_strong_with_s_zero(G):
    for C in enumerate_vertex_covers(G, minimal_only=True):
        r = analyze_cover(G, C)
        assert r.strong and r.s == 0 and r.minimal


@given(trees(max_n=7), st.data())
def test_cover_complement_duality(G, data):
    C = data.draw(st.sets(st.sampled_from(G.vertices)))
    S = set(G.vertices) - C
    assert is_vertex_cover(G, C) == is_independent(G, S)


@given(trees(max_n=7))
def test_minimal_enumeration_matches_bruteforce(G):
    got = {frozenset(c) for c in enumerate_vertex_covers(G, minimal_only=True)}
    assert got == {frozenset(c) for c in bruteforce.covers(G, minimal_only=True)}
    assert all(is_minimal_cover(G, c) for c in got)


@given(increasing_trees(max_n=7))
def test_strong_nonminimal_covers_have_all_components_rooted(G):
    for C in enumerate_vertex_covers(G):
        r = analyze_cover(G, C)
        if r.strong:
            assert len(r.components) == len(r.neighborhood)
            assert set(r.special) <= set(C) - set(r.neighborhood)
