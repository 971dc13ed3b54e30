"""Associated primes of powers of the edge ideal of an increasing weighted tree.

``(C)`` is associated to ``I^t`` exactly when ``C`` is a strong vertex cover
and ``s(C) + 1 <= t``. Everything here is a transcription of that rule over
all ``2**n`` subsets; nothing touches monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .covers import analyze_cover, cover_key, enumerate_vertex_covers, _require_cover, _require_increasing
from .errors import InvalidPower, TrivialTree
from .graph import VertexSet, WeightedGraph


def _check_power(t) -> int:
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InvalidPower(f"power must be a positive integer, got {t!r}")
    return t


@dataclass(frozen=True)
class AssResult:
    t: int
    primes: tuple[VertexSet, ...]

    def to_json(self) -> dict:
        return {"t": self.t, "primes": [list(P) for P in self.primes]}


@dataclass(frozen=True)
class StabilityReport:
    astab: int
    ass_infinity: tuple[VertexSet, ...]
    per_cover: dict  # cover -> first power at which it is associated

    def to_json(self) -> dict:
        return {
            "astab": self.astab,
            "ass_infinity": [list(C) for C in self.ass_infinity],
            "per_cover": [{"cover": list(C), "first_power": k} for C, k in self.per_cover.items()],
        }


def first_power(G: WeightedGraph, C: Iterable[str]) -> int | None:
    """``s(C) + 1`` for a strong cover, ``None`` when ``(C)`` is never associated."""
    report = analyze_cover(G, C)
    return report.s + 1 if report.strong else None


def is_associated(G: WeightedGraph, C: Iterable[str], t: int) -> bool:
    _require_increasing(G)
    _check_power(t)
    C = _require_cover(G, C)
    k = first_power(G, C)
    return k is not None and k <= t


def _first_powers(G: WeightedGraph) -> dict[VertexSet, int]:
    if G.n == 1:
        return {}
    out = {}
    for C in enumerate_vertex_covers(G):
        k = first_power(G, C)
        if k is not None:
            out[C] = k
    return out


def ass_power(G: WeightedGraph, t: int) -> AssResult:
    _require_increasing(G)
    _check_power(t)
    primes = tuple(C for C, k in _first_powers(G).items() if k <= t)
    return AssResult(t, tuple(sorted(primes, key=lambda C: cover_key(G, C))))


def ass_infinity(G: WeightedGraph) -> tuple[VertexSet, ...]:
    return astab(G).ass_infinity


def astab(G: WeightedGraph) -> StabilityReport:
    _require_increasing(G)
    if G.m == 0:
        raise TrivialTree("the trivial tree has the zero ideal; astab is undefined")
    per = _first_powers(G)
    order = sorted(per, key=lambda C: cover_key(G, C))
    return StabilityReport(
        astab=max(per.values(), default=1),
        ass_infinity=tuple(order),
        per_cover={C: per[C] for C in order},
    )
