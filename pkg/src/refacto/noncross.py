"""Intervals below a Coxeter element in the codimension order and the reflection-length order.

x <= y in the codimension order when codim(x) + codim(x^-1 y) = codim(y);
the reflection order is the same test with reflection length instead of
codimension.  For the well-generated groups here the two intervals [1, c]
coincide, which is checked rather than assumed.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .wreath import (
    GenPerm,
    GroupSpec,
    coxeter_element,
    enumerate_group,
    fixdim,
    group_order,
    identity,
    invariants,
    reflections,
)

DEFAULT_PRODUCT_BUDGET = 10**6


def codim(spec: GroupSpec, u: GenPerm) -> int:
    # for S_n (rank n-1) the all-ones line is always fixed, so cycles - 1 is the fixdim
    return spec.n - fixdim(u)


def codim_leq(spec: GroupSpec, x: GenPerm, y: GenPerm) -> bool:
    return codim(spec, x) + codim(spec, x.inverse() * y) == codim(spec, y)


@lru_cache(maxsize=16)
def reflection_lengths(spec: GroupSpec) -> dict[GenPerm, int]:
    """Breadth-first search over the Cayley graph with reflection generators."""
    refl = reflections(spec)
    start = identity(spec)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for r in refl:
            h = g * r
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    if len(dist) != group_order(spec):
        raise RuntimeError(f"reflections do not generate {spec}")
    return dist


def _products(refl: Sequence[GenPerm], spec: GroupSpec, length: int, budget: int) -> set[GenPerm]:
    layer = {identity(spec)}
    for _ in range(length):
        layer = {g * r for g in layer for r in refl}
        if len(layer) > budget:
            raise RuntimeError(f"more than {budget} products of {length} reflections")
    return layer


def reflection_length(spec: GroupSpec, u: GenPerm, max_length: int | None = None,
                      budget: int = DEFAULT_PRODUCT_BUDGET) -> int:
    """Smallest l with u a product of l reflections.

    Small groups use a full breadth-first search; large ones meet in the
    middle with sets of products of about l/2 reflections.
    """
    if group_order(spec) <= 20000:
        return reflection_lengths(spec)[u]
    refl = reflections(spec)
    if max_length is None:
        max_length = 2 * spec.n
    halves: dict[int, set[GenPerm]] = {}

    def half(m: int) -> set[GenPerm]:
        if m not in halves:
            halves[m] = _products(refl, spec, m, budget)
        return halves[m]

    for ell in range(max_length + 1):
        a, b = ell // 2, ell - ell // 2
        right = half(b)
        if any(x.inverse() * u in right for x in half(a)):
            return ell
    raise ValueError(f"reflection length exceeds {max_length}")


@dataclass(frozen=True)
class Interval:
    spec: GroupSpec
    top: GenPerm
    order: str
    rank: dict  # element -> rank

    def __len__(self) -> int:
        return len(self.rank)

    def __contains__(self, u: GenPerm) -> bool:
        return u in self.rank

    def elements(self) -> list[GenPerm]:
        return sorted(self.rank)

    def rank_sizes(self) -> list[int]:
        top = self.rank[self.top]
        return [sum(1 for r in self.rank.values() if r == i) for i in range(top + 1)]


def _length_fn(spec: GroupSpec, order: str):
    if order == "codim":
        return lambda u: codim(spec, u)
    if order == "refl":
        lengths = reflection_lengths(spec)
        return lengths.__getitem__
    raise ValueError(f"unknown order {order!r}")


def interval(spec: GroupSpec, c: GenPerm | None = None, order: str = "codim") -> Interval:
    """All w with length(w) + length(w^-1 c) = length(c)."""
    if c is None:
        c = coxeter_element(spec)
    ln = _length_fn(spec, order)
    top = ln(c)
    members = {}
    for w in enumerate_group(spec):
        lw = ln(w)
        if lw + ln(w.inverse() * c) == top:
            members[w] = lw
    return Interval(spec, c, order, members)


def catalan_number(spec: GroupSpec) -> int:
    inv = invariants(spec)
    num = math.prod(inv.h + d for d in inv.degrees)
    return num // math.prod(inv.degrees)


def kreweras(iv: Interval) -> dict[GenPerm, GenPerm]:
    """w -> w^-1 c, an order-reversing bijection of the interval."""
    return {w: w.inverse() * iv.top for w in iv.rank}


def chains_by_rank_jumps(spec: GroupSpec, k: int, s: Sequence[int], iv: Interval | None = None) -> int:
    """Multichains 1 = g_0 <= g_1 <= ... <= g_k = c with rank(g_i) - rank(g_{i-1}) = s_i."""
    if len(s) != k:
        raise ValueError("need k rank jumps")
    if iv is None:
        iv = interval(spec)
    top = iv.rank[iv.top]
    if sum(s) != top or any(x < 0 for x in s):
        return 0
    ln = _length_fn(spec, iv.order)
    by_rank: dict[int, list[GenPerm]] = {}
    for w, r in iv.rank.items():
        by_rank.setdefault(r, []).append(w)
    layer = {identity(spec): 1}
    level = 0
    for jump in s:
        nxt: dict[GenPerm, int] = {}
        for g in by_rank.get(level + jump, []):
            total = 0
            for h, c in layer.items():
                if ln(h.inverse() * g) == jump:
                    total += c
            if total:
                nxt[g] = total
        layer = nxt
        level += jump
    return layer.get(iv.top, 0)


def zeta_by_chains(spec: GroupSpec, k: int) -> int:
    iv = interval(spec)
    top = iv.rank[iv.top]
    from .closed_forms import weak_compositions

    return sum(chains_by_rank_jumps(spec, k, s, iv) for s in weak_compositions(top, k))
