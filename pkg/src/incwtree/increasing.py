"""Increasing weighted trees: paths, roots, special vertices and mu."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IsolatedVertex, NotAPath, NotATree, NotIncreasingTree
from .graph import VertexSet, WeightedGraph, is_tree, leaves, neighbors, unique_path


def is_increasing_path(G: WeightedGraph, path: Sequence[str], strict: bool = False) -> bool:
    """Whether the edge weights along ``path`` never decrease (or strictly grow)."""
    if len(set(path)) != len(path):
        raise NotAPath(f"repeated vertex in {list(path)}")
    for u in path:
        G.index(u)
    ws = []
    for a, b in zip(path, path[1:]):
        if not G.has_edge(a, b):
            raise NotAPath(f"{a!r} and {b!r} are not adjacent")
        ws.append(G.weight(a, b))
    if strict:
        return all(x < y for x, y in zip(ws, ws[1:]))
    return all(x <= y for x, y in zip(ws, ws[1:]))


def valid_roots(G: WeightedGraph) -> VertexSet:
    """All vertices v such that every leaf-to-v path is increasing.

    Brute force over (candidate, leaf) pairs; fine at the sizes this package
    targets.
    """
    if not is_tree(G):
        raise NotATree("valid_roots needs a tree")
    if G.n == 1:
        return G.vertices
    ls = leaves(G)
    return tuple(
        v for v in G.vertices
        if all(is_increasing_path(G, unique_path(G, leaf, v)) for leaf in ls)
    )


def is_increasing_tree(G: WeightedGraph) -> bool:
    return is_tree(G) and bool(valid_roots(G))


@dataclass(frozen=True)
class RootedIncreasingTree:
    tree: WeightedGraph
    root: str

    def __post_init__(self):
        if not is_tree(self.tree):
            raise NotATree("rooted tree is not a tree")
        if self.root not in valid_roots(self.tree):
            raise NotIncreasingTree(f"{self.root!r} is not a root of {self.tree!r}")

    def parents(self) -> dict[str, str]:
        """Map each non-root vertex to its neighbor on the way to the root."""
        G = self.tree
        parent = {}
        stack = [self.root]
        seen = {self.root}
        while stack:
            a = stack.pop()
            for b in neighbors(G, a):
                if b not in seen:
                    seen.add(b)
                    parent[b] = a
                    stack.append(b)
        return parent


def special_vertices_rooted(T: RootedIncreasingTree) -> VertexSet:
    # w is special iff a child edge of w has the same weight as w's parent edge
    G = T.tree
    parent = T.parents()
    special = []
    for w, x in parent.items():
        up = G.weight(w, x)
        if any(u != x and G.weight(u, w) == up for u in neighbors(G, w)):
            special.append(w)
    return G.canon(special)


def special_count_rooted(T: RootedIncreasingTree) -> int:
    return len(special_vertices_rooted(T))


def special_vertices_by_paths(T: RootedIncreasingTree) -> VertexSet:
    """Special vertices straight from the definition: scan every simple path
    ``u -> w -> x -> ... -> root`` for ``w(uw) == w(wx)``."""
    G = T.tree
    found = set()
    for u in G.vertices:
        path = unique_path(G, u, T.root)
        if len(path) >= 3 and G.weight(path[0], path[1]) == G.weight(path[1], path[2]):
            found.add(path[1])
    return G.canon(found)


def mu(G: WeightedGraph, x: str) -> int:
    """Largest weight of an edge at ``x``."""
    nbrs = neighbors(G, x)
    if not nbrs:
        raise IsolatedVertex(f"{x!r} has no incident edges")
    return max(G.weight(x, y) for y in nbrs)
