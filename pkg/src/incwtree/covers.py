"""Vertex covers of weighted trees, the reduced graph G_S and strong covers.

For a cover ``C`` with complement ``S`` the reduced graph ``G_S`` lives on
``V \\ S``; an edge ``uz`` of ``G \\ S`` is dropped when ``u`` touches ``S`` and
``w(uz) >= nu_S(u)``, where ``nu_S(u)`` is the lightest edge from ``u`` into
``S``. ``C`` is strong when every component of ``G_S`` holds a vertex of
``N(S)``; ``s(C)`` adds up the special-vertex counts of those rooted pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .errors import (
    MultipleRoots,
    NotACover,
    NotIncreasingTree,
    NotIndependent,
    NotInNeighborhood,
    TooManyVertices,
)
from .graph import VertexSet, WeightedGraph, connected_components, induced_subgraph, neighbors
from .increasing import RootedIncreasingTree, is_increasing_tree, special_vertices_rooted

MAX_ENUM_VERTICES = 24


def cover_key(G: WeightedGraph, C: Iterable[str]) -> tuple:
    """Sort key for vertex sets: by size, then by declared indices."""
    idx = tuple(G.index(u) for u in C)
    return (len(idx), idx)


def is_vertex_cover(G: WeightedGraph, C: Iterable[str]) -> bool:
    inside = set(G.canon(C))
    return all(u in inside or v in inside for u, v, _ in G.edges)


def is_independent(G: WeightedGraph, S: Iterable[str]) -> bool:
    inside = set(G.canon(S))
    return not any(u in inside and v in inside for u, v, _ in G.edges)


def is_minimal_cover(G: WeightedGraph, C: Iterable[str]) -> bool:
    C = G.canon(C)
    if not is_vertex_cover(G, C):
        return False
    return all(not is_vertex_cover(G, [x for x in C if x != y]) for y in C)


def enumerate_vertex_covers(G: WeightedGraph, minimal_only: bool = False) -> list[VertexSet]:
    """Every vertex cover of ``G`` (or only the inclusion-minimal ones).

    Exhaustive over all ``2**n`` subsets.
    """
    n = G.n
    if n > MAX_ENUM_VERTICES:
        raise TooManyVertices(f"cover enumeration is capped at {MAX_ENUM_VERTICES} vertices, got {n}")
    edge_masks = [(1 << G.index(u)) | (1 << G.index(v)) for u, v, _ in G.edges]
    covers = [mask for mask in range(1 << n) if all(mask & em for em in edge_masks)]
    if minimal_only:
        cover_set = set(covers)
        covers = [c for c in covers if not any((c & ~(1 << i)) in cover_set for i in range(n) if c >> i & 1)]
    labels = G.vertices
    out = [tuple(labels[i] for i in range(n) if c >> i & 1) for c in covers]
    out.sort(key=lambda c: cover_key(G, c))
    return out


def neighborhood(G: WeightedGraph, S: Iterable[str]) -> VertexSet:
    """``N_G(S)``: vertices outside ``S`` with a neighbor in ``S``."""
    S = set(G.canon(S))
    return G.canon(u for s in S for u in neighbors(G, s) if u not in S)


def _independent(G: WeightedGraph, S: Iterable[str]) -> VertexSet:
    S = G.canon(S)
    if not is_independent(G, S):
        raise NotIndependent(f"{list(S)} is not an independent set")
    return S


def nu(G: WeightedGraph, S: Iterable[str], u: str) -> int:
    """Lightest weight of an edge from ``u`` into ``S``."""
    S = set(_independent(G, S))
    ws = [G.weight(u, z) for z in neighbors(G, u) if z in S]
    if u in S or not ws:
        raise NotInNeighborhood(f"{u!r} is not in the neighborhood of {sorted(S)}")
    return min(ws)


def _nu_map(G: WeightedGraph, S: VertexSet) -> dict[str, int]:
    return {u: nu(G, S, u) for u in neighborhood(G, S)}


def build_G_S(G: WeightedGraph, S: Iterable[str]) -> WeightedGraph:
    S = _independent(G, S)
    nus = _nu_map(G, S)
    S = set(S)
    rest = [u for u in G.vertices if u not in S]
    kept = []
    for u, z, w in G.edges:
        if u in S or z in S:
            continue
        # checked at both endpoints
        if (u in nus and w >= nus[u]) or (z in nus and w >= nus[z]):
            continue
        kept.append((u, z, w))
    return WeightedGraph(rest, kept)


@dataclass(frozen=True)
class RootedComponent:
    subtree: WeightedGraph
    root: Optional[str] = None

    def as_rooted_tree(self) -> RootedIncreasingTree:
        if self.root is None:
            raise ValueError("component has no root")
        return RootedIncreasingTree(self.subtree, self.root)


@lru_cache(maxsize=256)
def _require_increasing(G: WeightedGraph) -> None:
    if not is_increasing_tree(G):
        raise NotIncreasingTree(f"{G!r} is not an increasing weighted tree")


def decompose(G: WeightedGraph, S: Iterable[str]) -> list[RootedComponent]:
    """Components of ``G_S``, each tagged with its ``N_G(S)`` vertex if any.

    Rooted components are checked to be increasing trees at their root.
    """
    _require_increasing(G)
    S = _independent(G, S)
    nbhd = set(neighborhood(G, S))
    GS = build_G_S(G, S)
    out = []
    for comp in connected_components(GS):
        roots = [u for u in comp if u in nbhd]
        if len(roots) > 1:
            raise MultipleRoots(f"component {list(comp)} contains {roots}")
        piece = RootedComponent(induced_subgraph(GS, comp), roots[0] if roots else None)
        if piece.root is not None:
            piece.as_rooted_tree()
        out.append(piece)
    return out


@dataclass(frozen=True)
class CoverReport:
    cover: VertexSet
    complement: VertexSet
    neighborhood: VertexSet
    nu: dict = field(hash=False)
    components: tuple
    strong: bool
    special: VertexSet
    s: int
    minimal: bool
    full_cover: bool

    def to_json(self) -> dict:
        return {
            "cover": list(self.cover),
            "complement": list(self.complement),
            "neighborhood": list(self.neighborhood),
            "nu": dict(self.nu),
            "components": [
                {"vertices": list(c.subtree.vertices), "root": c.root} for c in self.components
            ],
            "strong": self.strong,
            "minimal": self.minimal,
            "full_cover": self.full_cover,
            "special": list(self.special),
            "s": self.s,
        }


def _require_cover(G: WeightedGraph, C: Iterable[str]) -> VertexSet:
    C = G.canon(C)
    if not is_vertex_cover(G, C):
        raise NotACover(f"{list(C)} is not a vertex cover")
    return C


def analyze_cover(G: WeightedGraph, C: Iterable[str]) -> CoverReport:
    """Decide strength of ``C`` and compute ``s(C)`` by the component formula.

    ``C = V`` is reported as not strong with ``s = 0`` and ``full_cover`` set.
    """
    _require_increasing(G)
    C = _require_cover(G, C)
    inside = set(C)
    S = tuple(u for u in G.vertices if u not in inside)
    nbhd = neighborhood(G, S)
    comps = tuple(decompose(G, S))
    full = not S
    minimal = is_minimal_cover(G, C)
    special: list[str] = []
    for comp in comps:
        if comp.root is not None:
            special.extend(special_vertices_rooted(comp.as_rooted_tree()))
    special_set = G.canon(special)
    strong = not full and (minimal or all(c.root is not None for c in comps))
    return CoverReport(
        cover=C,
        complement=S,
        neighborhood=nbhd,
        nu=_nu_map(G, S),
        components=comps,
        strong=strong,
        special=special_set,
        s=0 if full else len(special_set),
        minimal=minimal,
        full_cover=full,
    )


def _reaching_paths(G: WeightedGraph, w: str, nbhd: set, nus: dict):
    """Yield every simple path from ``w`` that stays off ``nbhd`` until its
    last vertex, which lies in ``nbhd`` and is entered by an edge lighter
    than its ``nu``."""
    stack = [[w]]
    while stack:
        path = stack.pop()
        last = path[-1]
        for y in neighbors(G, last):
            if y in path:
                continue
            if y in nbhd:
                if G.weight(last, y) < nus[y]:
                    yield path + [y]
            else:
                stack.append(path + [y])


def is_strong_cover_by_definition(G: WeightedGraph, C: Iterable[str]) -> bool:
    """Strong-cover test by literal path search; cross-checks analyze_cover."""
    _require_increasing(G)
    C = _require_cover(G, C)
    if len(C) == G.n:
        return False
    if is_minimal_cover(G, C):
        return True
    inside = set(C)
    S = tuple(u for u in G.vertices if u not in inside)
    nbhd = set(neighborhood(G, S))
    nus = _nu_map(G, S)
    return all(
        next(_reaching_paths(G, w, nbhd, nus), None) is not None
        for w in C if w not in nbhd
    )


def special_vertices_by_definition(G: WeightedGraph, C: Iterable[str]) -> VertexSet:
    """Vertices ``w2`` lying on some qualifying path ``w1 -> w2 -> w3 -> ...``
    (with ``w1`` in ``C \\ N(S)``) whose first two edges weigh the same."""
    _require_increasing(G)
    C = _require_cover(G, C)
    if len(C) == G.n:
        return ()
    inside = set(C)
    S = tuple(u for u in G.vertices if u not in inside)
    nbhd = set(neighborhood(G, S))
    nus = _nu_map(G, S)
    found = set()
    for w in C:
        if w in nbhd:
            continue
        for path in _reaching_paths(G, w, nbhd, nus):
            if len(path) >= 3 and G.weight(path[0], path[1]) == G.weight(path[1], path[2]):
                found.add(path[1])
    return G.canon(found)


def strong_covers(G: WeightedGraph) -> list[CoverReport]:
    reports = (analyze_cover(G, c) for c in enumerate_vertex_covers(G))
    return [r for r in reports if r.strong]

