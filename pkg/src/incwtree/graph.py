"""Immutable edge-weighted graphs, tree queries and the two tree file formats.

Vertex sets are returned as tuples of labels sorted by the graph's declared
vertex order, so every result is deterministic.
"""

from __future__ import annotations

import json
from collections import deque
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    GraphError,
    NonpositiveWeight,
    NotATree,
    ParseError,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
)

VertexSet = tuple  # tuple[str, ...] in canonical order

MAX_WEIGHT = 2**64 - 1


class WeightedGraph:
    """A simple graph with positive integer edge weights.

    Built once, never mutated. ``vertices`` keeps the input order, which is the
    canonical order used for every vertex set this package returns.
    """

    __slots__ = ("_labels", "_index", "_edges", "_adj", "_labeled_edges", "_is_tree")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, int]] = ()):
        labels = tuple(vertices)
        index: dict[str, int] = {}
        for i, lab in enumerate(labels):
            if not isinstance(lab, str) or not lab:
                raise GraphError(f"vertex labels must be nonempty strings, got {lab!r}")
            if lab in index:
                raise DuplicateVertex(f"duplicate vertex {lab!r}")
            index[lab] = i
        adj: list[dict[int, int]] = [dict() for _ in labels]
        for u, v, w in edges:
            for end in (u, v):
                if end not in index:
                    raise UnknownEndpoint(f"edge ({u!r}, {v!r}) uses undeclared vertex {end!r}")
            if u == v:
                raise SelfLoop(f"self-loop at {u!r}")
            if isinstance(w, bool) or not isinstance(w, int):
                raise NonpositiveWeight(f"weight of edge ({u!r}, {v!r}) must be an integer, got {w!r}")
            if w < 1:
                raise NonpositiveWeight(f"weight of edge ({u!r}, {v!r}) is {w}, must be >= 1")
            if w > MAX_WEIGHT:
                raise NonpositiveWeight(f"weight of edge ({u!r}, {v!r}) exceeds 64 bits")
            i, j = index[u], index[v]
            if j in adj[i]:
                raise DuplicateEdge(f"duplicate edge ({u!r}, {v!r})")
            adj[i][j] = w
            adj[j][i] = w
        self._labels = labels
        self._index = index
        self._adj = tuple({k: a[k] for k in sorted(a)} for a in adj)
        self._edges = tuple(
            (i, j, self._adj[i][j]) for i in range(len(labels)) for j in self._adj[i] if i < j
        )
        self._labeled_edges = tuple((labels[i], labels[j], w) for i, j, w in self._edges)
        self._is_tree = len(labels) >= 1 and len(self._edges) == len(labels) - 1 and len(connected_components(self)) == 1

    # basic accessors

    @property
    def vertices(self) -> VertexSet:
        return self._labels

    @property
    def edges(self) -> tuple[tuple[str, str, int], ...]:
        """Edges as ``(u, v, w)`` with ``u`` declared before ``v``."""
        return self._labeled_edges

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return len(self._edges)

    def index(self, u: str) -> int:
        try:
            return self._index[u]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {u!r}") from None

    def __contains__(self, u: object) -> bool:
        return u in self._index

    def has_edge(self, u: str, v: str) -> bool:
        return self.index(v) in self._adj[self.index(u)]

    def weight(self, u: str, v: str) -> int:
        i, j = self.index(u), self.index(v)
        try:
            return self._adj[i][j]
        except KeyError:
            raise GraphError(f"{u!r} and {v!r} are not adjacent") from None

    def canon(self, labels: Iterable[str]) -> VertexSet:
        """Deduplicate ``labels`` and sort them by declared order."""
        return tuple(sorted(set(labels), key=self.index))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._labels == other._labels and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self._labels, frozenset(self.edges)))

    def __repr__(self) -> str:
        es = ", ".join(f"{u}-{v}:{w}" for u, v, w in self.edges)
        return f"WeightedGraph([{', '.join(self._labels)}], [{es}])"


def build_graph(vertices: Sequence[str], edges: Iterable[tuple[str, str, int]]) -> WeightedGraph:
    return WeightedGraph(vertices, edges)


# adjacency queries


def neighbors(G: WeightedGraph, u: str) -> VertexSet:
    lab = G._labels
    return tuple(lab[j] for j in G._adj[G.index(u)])


def degree(G: WeightedGraph, u: str) -> int:
    return len(G._adj[G.index(u)])


def leaves(G: WeightedGraph) -> VertexSet:
    return tuple(lab for i, lab in enumerate(G._labels) if len(G._adj[i]) == 1)


def leaf_neighbors(G: WeightedGraph, u: str) -> VertexSet:
    """Neighbors of ``u`` that are leaves of ``G``."""
    lab = G._labels
    return tuple(lab[j] for j in G._adj[G.index(u)] if len(G._adj[j]) == 1)


def connected_components(G: WeightedGraph) -> list[VertexSet]:
    """Components in order of their first declared vertex."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in G._adj[a]:
                if not seen[b]:
                    seen[b] = True
                    comp.append(b)
                    queue.append(b)
        comps.append(tuple(G._labels[i] for i in sorted(comp)))
    return comps


def is_tree(G: WeightedGraph) -> bool:
    return G._is_tree


def unique_path(G: WeightedGraph, u: str, v: str) -> list[str]:
    """The simple path from ``u`` to ``v`` in the tree ``G``."""
    src, dst = G.index(u), G.index(v)
    if not is_tree(G):
        raise NotATree("unique_path needs a tree")
    parent = {src: -1}
    queue = deque([src])
    while queue:
        a = queue.popleft()
        if a == dst:
            break
        for b in G._adj[a]:
            if b not in parent:
                parent[b] = a
                queue.append(b)
    path = []
    a = dst
    while a != -1:
        path.append(G._labels[a])
        a = parent[a]
    path.reverse()
    return path


def induced_subgraph(G: WeightedGraph, W: Iterable[str]) -> WeightedGraph:
    keep = G.canon(W)
    inside = set(keep)
    return WeightedGraph(keep, [(u, v, w) for u, v, w in G.edges if u in inside and v in inside])


# file formats


def to_json(G: WeightedGraph) -> dict:
    return {
        "vertices": list(G.vertices),
        "edges": [{"u": u, "v": v, "w": w} for u, v, w in G.edges],
    }


def from_json(data: dict) -> WeightedGraph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ParseError('expected an object with "vertices" and "edges"')
    try:
        edges = [(e["u"], e["v"], e["w"]) for e in data["edges"]]
    except (TypeError, KeyError) as exc:
        raise ParseError(f'each edge needs "u", "v" and "w": {exc}') from None
    return WeightedGraph(data["vertices"], edges)


def to_text(G: WeightedGraph) -> str:
    lines = [f"{u} {v} {w}" for u, v, w in G.edges]
    touched = {x for u, v, _ in G.edges for x in (u, v)}
    lines += [u for u in G.vertices if u not in touched]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> WeightedGraph:
    """Parse ``u v w`` edge lines and bare ``u`` vertex lines.

    Vertices are ordered by first appearance. Blank lines and ``#`` comments
    are skipped.
    """
    order: dict[str, None] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            order.setdefault(parts[0])
        elif len(parts) == 3:
            u, v, w = parts
            try:
                weight = int(w)
            except ValueError:
                raise ParseError(f"line {lineno}: weight {w!r} is not an integer") from None
            order.setdefault(u)
            order.setdefault(v)
            edges.append((u, v, weight))
        else:
            raise ParseError(f"line {lineno}: expected 'u v w' or 'u', got {raw!r}")
    return WeightedGraph(list(order), edges)


def loads(text: str) -> WeightedGraph:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return from_json(data)
    return from_text(text)


def load_graph(path: str | Path) -> WeightedGraph:
    return loads(Path(path).read_text())
