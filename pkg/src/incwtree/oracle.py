"""Brute-force monomial ideal arithmetic and associated primes by witness search.

This module knows nothing about covers or special vertices. It only sees
exponent vectors, so it can be used to check the combinatorial side.

A monomial is a tuple of exponents indexed like the ideal's ``ambient``
labels. A prime ``(x_i : i in P)`` is represented by its support ``P``, a
tuple of labels.

Associated primes are found from the witness characterisation: ``P`` is
associated to ``I`` iff ``(I : f) = (P)`` for some monomial ``f`` not in
``I``. Raising an exponent of ``f`` past ``D_i``, the largest ``x_i``
exponent among the minimal generators, changes neither membership nor the
colon, so the search over ``0 <= f_i <= D_i`` is exhaustive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import AmbientMismatch, InvalidPower, Overflow, SearchSpaceTooLarge, UnitIdeal, UnknownVertex, ZeroIdeal
from .graph import WeightedGraph

Monomial = tuple  # tuple[int, ...]

DEFAULT_BUDGET = 10**9
MAX_EXPONENT = 2**63 - 1
_BLOCK_CELLS = 4_000_000


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda g: (sum(g), g)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its minimal generators, sorted."""

    ambient: tuple[str, ...]
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        n = len(self.ambient)
        for g in self.gens:
            if len(g) != n:
                raise AmbientMismatch(f"generator {g} does not match {n} variables")
            if any(a < 0 for a in g):
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "gens", _minimal(tuple(int(a) for a in g) for g in self.gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def index(self, x: str) -> int:
        try:
            return self.ambient.index(x)
        except ValueError:
            raise UnknownVertex(f"unknown variable {x!r}") from None

    def monomial(self, exps: Mapping[str, int]) -> Monomial:
        m = [0] * len(self.ambient)
        for x, a in exps.items():
            m[self.index(x)] = a
        return tuple(m)

    def support(self) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.ambient) if any(g[i] for g in self.gens))

    def caps(self) -> tuple[int, ...]:
        """Largest exponent of each variable over the minimal generators."""
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(len(self.ambient)))

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(self.ambient, g) for g in self.gens) + ")"


def format_monomial(ambient: Sequence[str], m: Monomial) -> str:
    parts = [x if a == 1 else f"{x}^{a}" for x, a in zip(ambient, m) if a]
    return "*".join(parts) or "1"


def minimalize(ambient: Sequence[str], gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(tuple(ambient), tuple(gens))


def contains(I: MonomialIdeal, f: Monomial) -> bool:
    return any(divides(g, f) for g in I.gens)


def edge_ideal(G: WeightedGraph) -> MonomialIdeal:
    """Generators ``(x_i x_j)^w`` over the weighted edges of ``G``."""
    n = G.n
    gens = []
    for u, v, w in G.edges:
        m = [0] * n
        m[G.index(u)] = w
        m[G.index(v)] = w
        gens.append(tuple(m))
    return MonomialIdeal(G.vertices, tuple(gens))


def _same_ambient(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ambient != J.ambient:
        raise AmbientMismatch(f"{I.ambient} vs {J.ambient}")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.ambient, I.gens + J.gens)


def add_pure_power(I: MonomialIdeal, v: str, m: int) -> MonomialIdeal:
    """The ideal ``(v^m) + I``."""
    if m < 1:
        raise InvalidPower(f"pure power exponent must be >= 1, got {m}")
    if m > MAX_EXPONENT:
        raise Overflow(f"exponent {m} exceeds 64 bits")
    return MonomialIdeal(I.ambient, I.gens + (I.monomial({v: m}),))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.ambient, tuple(tuple(a + b for a, b in zip(f, g)) for f in I.gens for g in J.gens))


def ideal_power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InvalidPower(f"power must be a positive integer, got {t!r}")
    if I.gens and t * max(max(g) for g in I.gens) > MAX_EXPONENT:
        raise Overflow(f"exponents of I^{t} exceed 64 bits")
    result = I
    for _ in range(t - 1):
        result = ideal_product(result, I)
    return result


def ideal_power_naive(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """All products of ``t`` generators, minimalised once at the end."""
    prods = (tuple(map(sum, zip(*combo))) for combo in combinations_with_replacement(I.gens, t))
    return MonomialIdeal(I.ambient, tuple(prods))


def colon(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """``(I : f)``, generated by ``g / gcd(g, f)``."""
    if len(f) != len(I.ambient):
        raise AmbientMismatch(f"monomial {f} does not match {len(I.ambient)} variables")
    return MonomialIdeal(I.ambient, tuple(tuple(max(a - b, 0) for a, b in zip(g, f)) for g in I.gens))


def localize(I: MonomialIdeal, W: Iterable[str]) -> MonomialIdeal:
    """Invert the variables in ``W``: their exponents are set to zero."""
    drop = {I.index(x) for x in W}
    return MonomialIdeal(I.ambient, tuple(tuple(0 if i in drop else a for i, a in enumerate(g)) for g in I.gens))


def _support_key(ambient: Sequence[str], P: Sequence[str]) -> tuple:
    idx = tuple(ambient.index(x) for x in P)
    return (len(idx), idx)


def _check_searchable(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise ZeroIdeal("the zero ideal has no monomial associated primes")
    if I.is_unit:
        raise UnitIdeal("the unit ideal has no associated primes")


def _dtype(caps: Sequence[int]):
    return np.int16 if max(caps, default=0) < 2**15 else np.int64


def _witness_blocks(caps: Sequence[int], budget: int, cells_per_vector: int):
    """Yield exponent-vector blocks covering ``prod(cap + 1)`` vectors in
    colexicographic order (first coordinate varies fastest)."""
    shape = tuple(c + 1 for c in caps)
    total = math.prod(shape)
    if total > budget:
        raise SearchSpaceTooLarge(total, budget)
    step = max(1, _BLOCK_CELLS // max(1, cells_per_vector))
    for start in range(0, total, step):
        idx = np.arange(start, min(total, start + step))
        yield np.stack(np.unravel_index(idx, shape, order="F"), axis=1).astype(_dtype(caps))


def _colon_planes(gens: np.ndarray, F: np.ndarray) -> list[np.ndarray]:
    """Exponents of ``g / gcd(g, f)`` split per variable: plane ``i`` has
    shape ``(len(F), len(gens))``."""
    return [np.maximum(gens[None, :, i] - F[:, i, None], 0) for i in range(gens.shape[1])]


def _outside(planes: list[np.ndarray]) -> np.ndarray:
    """Rows ``f`` with no colon generator equal to 1, i.e. ``f`` not in ``I``."""
    nonunit = planes[0] > 0
    for p in planes[1:]:
        nonunit |= p > 0
    return nonunit.all(axis=1)


def associated_primes(I: MonomialIdeal, budget: int = DEFAULT_BUDGET) -> list[tuple[str, ...]]:
    """Supports of all associated primes of ``I``, by exhaustive witness search."""
    _check_searchable(I)
    caps = I.caps()
    gens = np.array(I.gens, dtype=_dtype(caps))
    m, n = gens.shape
    found: set[tuple[bool, ...]] = set()
    for F in _witness_blocks(caps, budget, m * n):
        F = F[_outside(_colon_planes(gens, F))]
        if not len(F):
            continue
        planes = _colon_planes(gens, F)
        degree = sum(planes)
        # x_i lies in (I : f) iff some colon generator is exactly x_i
        in_colon = np.stack([((degree == 1) & (p == 1)).any(axis=1) for p in planes], axis=1)
        # (I : f) is prime iff each colon generator uses one of those variables
        covered = np.zeros(degree.shape, dtype=bool)
        for i, p in enumerate(planes):
            covered |= (p > 0) & in_colon[:, i, None]
        hits = in_colon[covered.all(axis=1)]
        for row in np.unique(hits, axis=0):
            found.add(tuple(bool(b) for b in row))
    primes = [tuple(x for x, b in zip(I.ambient, mask) if b) for mask in found]
    primes.sort(key=lambda P: _support_key(I.ambient, P))
    return primes


def is_associated_oracle(I: MonomialIdeal, P: Iterable[str], budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``(P)`` is associated to ``I``.

    After inverting every variable outside ``P`` the question is whether the
    maximal ideal of the ``P`` variables is associated, i.e. whether some
    ``f`` outside the localised ideal has ``x f`` inside it for every ``x``
    in ``P``. Only the ``P`` coordinates are searched.
    """
    _check_searchable(I)
    P = tuple(dict.fromkeys(P))
    if not P:
        raise ValueError("prime support must be nonempty")
    keep = [I.index(x) for x in P]
    J = localize(I, [x for x in I.ambient if x not in P])
    if J.is_unit:
        return False
    caps = [max(g[i] for g in J.gens) for i in keep]
    gens = np.array([[g[i] for i in keep] for g in J.gens], dtype=_dtype(caps))
    m, k = gens.shape
    for F in _witness_blocks(caps, budget, m * k):
        F = F[_outside(_colon_planes(gens, F))]
        if not len(F):
            continue
        planes = _colon_planes(gens, F)
        degree = sum(planes)
        ok = np.ones(len(F), dtype=bool)
        for p in planes:
            ok &= ((degree == 1) & (p == 1)).any(axis=1)
        if ok.any():
            return True
    return False
