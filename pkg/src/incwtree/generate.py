"""Labeled tree generation: Pruefer decoding, random sampling, exhaustive
enumeration and a brute-force canonical form for small weighted trees."""

from __future__ import annotations

import heapq
import random
from itertools import permutations, product
from typing import Iterator, Sequence

from .graph import WeightedGraph, degree, is_tree, neighbors
from .increasing import is_increasing_tree


def labels(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


def prufer_to_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Pruefer sequence of length ``n - 2`` into tree edges."""
    if n < 2:
        return []
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    heap = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(heap)
    edges = []
    for a in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(heap, a)
    u, v = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, v))
    return edges


def tree_from_prufer(seq: Sequence[int], n: int, weights: Sequence[int]) -> WeightedGraph:
    vs = labels(n)
    edges = prufer_to_edges(seq, n)
    return WeightedGraph(vs, [(vs[a], vs[b], w) for (a, b), w in zip(edges, weights)])


def random_tree(rng: random.Random, n: int, wmax: int) -> WeightedGraph:
    """Uniform labeled tree on ``n`` vertices with i.i.d. weights in ``[1, wmax]``."""
    seq = [rng.randrange(n) for _ in range(n - 2)]
    weights = [rng.randint(1, wmax) for _ in range(n - 1)]
    return tree_from_prufer(seq, n, weights)


def random_increasing_tree(
    rng: random.Random, n: int, wmax: int, max_attempts: int = 1_000_000
) -> tuple[WeightedGraph, int]:
    """Rejection-sample ``random_tree`` until it has a root.

    Returns the tree and the number of draws it took.
    """
    for attempt in range(1, max_attempts + 1):
        G = random_tree(rng, n, wmax)
        if is_increasing_tree(G):
            return G, attempt
    raise RuntimeError(f"no increasing tree after {max_attempts} draws (n={n}, wmax={wmax})")


def all_weighted_trees(n: int, weights: Sequence[int]) -> Iterator[WeightedGraph]:
    """Every labeled tree on ``x1..xn`` with every weight assignment."""
    if n == 1:
        yield WeightedGraph(labels(1))
        return
    for seq in product(range(n), repeat=n - 2):
        for ws in product(weights, repeat=n - 1):
            yield tree_from_prufer(seq, n, ws)


def canonical_form(G: WeightedGraph) -> tuple:
    """Isomorphism invariant of a weighted graph.

    Trees get an AHU-style encoding rooted at their center(s); anything else
    falls back to brute force over relabelings, so keep those small.
    """
    if is_tree(G):
        return ("tree", G.n, _tree_code(G))
    n = G.n
    idx_edges = [(G.index(u), G.index(v), w) for u, v, w in G.edges]
    best = min(
        tuple(sorted((min(p[a], p[b]), max(p[a], p[b]), w) for a, b, w in idx_edges))
        for p in permutations(range(n))
    ) if n else ()
    return ("graph", n, best)


def _tree_code(G: WeightedGraph) -> str:
    def encode(v: str, parent: str | None) -> str:
        kids = sorted(f"{G.weight(v, c)}{encode(c, v)}" for c in neighbors(G, v) if c != parent)
        return "(" + ",".join(kids) + ")"

    return min(encode(c, None) for c in _centers(G))


def _centers(G: WeightedGraph) -> list[str]:
    deg = {u: degree(G, u) for u in G.vertices}
    layer = [u for u in G.vertices if deg[u] <= 1]
    remaining = G.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for y in neighbors(G, u):
                deg[y] -= 1
                if deg[y] == 1:
                    nxt.append(y)
        layer = nxt
    return layer


def tree_shapes(n: int) -> list[WeightedGraph]:
    """One unweighted (all weights 1) labeled tree per isomorphism class."""
    seen = {}
    for G in all_weighted_trees(n, [1]):
        seen.setdefault(canonical_form(G), G)
    return list(seen.values())


def reweighted(G: WeightedGraph, weights: Sequence[int]) -> WeightedGraph:
    return WeightedGraph(G.vertices, [(u, v, w) for (u, v, _), w in zip(G.edges, weights)])
