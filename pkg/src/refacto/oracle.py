"""Brute-force enumeration of factorizations, used as ground truth for the closed forms.

A factorization of c into k factors is determined by its first k - 1 factors,
so the work is |G|^(k-1) tuples.  Tuples are classified by a per-factor key
(fixed-space dimension, weight-0 cycle type, or per-weight cycle counts) and
tallied.  Work can be split over the first factor across processes.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .perm_core import Partition, Permutation, is_transitive, orbits
from .polys import ExpPoly
from .wreath import (
    GenPerm,
    GroupSpec,
    coxeter_element,
    enumerate_group,
    fixdim,
    group_order,
    identity,
    reflections,
    weight0_cycle_type,
)

DEFAULT_WORK_LIMIT = 10**8

CLASSIFIERS = ("fixdim", "weight0_type", "weight_distribution")


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, limit: int):
        super().__init__(f"enumeration needs {required} tuples, over the work limit {limit}")
        self.required = required
        self.limit = limit


@dataclass(frozen=True)
class FactorQuery:
    spec: GroupSpec
    k: int
    target: GenPerm | None = None
    transitivity: str = "all"  # "all", "transitive" or "nontransitive"
    work_limit: int = DEFAULT_WORK_LIMIT
    workers: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.transitivity not in ("all", "transitive", "nontransitive"):
            raise ValueError(f"unknown transitivity filter {self.transitivity!r}")

    @property
    def element(self) -> GenPerm:
        return self.target if self.target is not None else coxeter_element(self.spec)

    @property
    def work(self) -> int:
        return group_order(self.spec) ** (self.k - 1)


def n1_cycle(n: int) -> GenPerm:
    """(1 2 ... n-1)(n) in S_n."""
    return GenPerm(Permutation.from_cycles([list(range(n - 1))], n))


@lru_cache(maxsize=32)
def _elements(spec: GroupSpec) -> tuple[GenPerm, ...]:
    return tuple(enumerate_group(spec))


def weight_distribution(u: GenPerm) -> tuple[int, ...]:
    """Number of cycles of each weight 0..d-1."""
    out = [0] * u.d
    for _, wt in u.cycles_with_weights():
        out[wt] += 1
    return tuple(out)


_KEYS = {
    "fixdim": fixdim,
    "weight0_type": weight0_cycle_type,
    "weight_distribution": weight_distribution,
}


def _keep(factors: Sequence[GenPerm], mode: str, n: int) -> bool:
    if mode == "all":
        return True
    t = is_transitive([u.perm for u in factors], n)
    return t if mode == "transitive" else not t


def _count_range(spec: GroupSpec, k: int, target: GenPerm, mode: str, classifier: str, start: int, stop: int) -> Counter:
    elems = _elements(spec)
    key = _KEYS[classifier]
    cache: dict[GenPerm, object] = {}

    def keyed(u: GenPerm):
        v = cache.get(u)
        if v is None:
            v = cache[u] = key(u)
        return v

    tally: Counter = Counter()
    n = spec.n
    if k == 1:
        if start == 0 and _keep([target], mode, n):
            tally[(keyed(target),)] += 1
        return tally
    for idx in range(start, stop):
        first = elems[idx]
        for rest in itertools.product(elems, repeat=k - 2):
            prefix = first
            for u in rest:
                prefix = prefix * u
            last = prefix.inverse() * target
            factors = (first, *rest, last)
            if _keep(factors, mode, n):
                tally[tuple(keyed(u) for u in factors)] += 1
    return tally


def _tally(q: FactorQuery, classifier: str) -> Counter:
    if q.work > q.work_limit:
        raise BudgetExceeded(q.work, q.work_limit)
    size = group_order(q.spec)
    target = q.element
    if q.workers <= 1 or q.k == 1:
        return _count_range(q.spec, q.k, target, q.transitivity, classifier, 0, size)
    bounds = [size * i // q.workers for i in range(q.workers + 1)]
    jobs = [(q.spec, q.k, target, q.transitivity, classifier, a, b) for a, b in zip(bounds, bounds[1:]) if a < b]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=q.workers) as pool:
        for part in pool.map(_count_range_star, jobs):
            total.update(part)
    return total


def _count_range_star(args):
    return _count_range(*args)


def count(q: FactorQuery, classifier: str = "fixdim"):
    """Fixdim classification gives an ExpPoly; the others give a dict from key tuples to counts."""
    if classifier not in CLASSIFIERS:
        raise ValueError(f"unknown classifier {classifier!r}")
    tally = _tally(q, classifier)
    if classifier == "fixdim":
        return ExpPoly(q.k, dict(tally))
    return dict(sorted(tally.items()))


def count_by_fixdim(spec: GroupSpec, k: int, **kw) -> ExpPoly:
    return count(FactorQuery(spec, k, **kw), "fixdim")


def count_by_weight0_type(q: FactorQuery) -> dict[tuple[Partition, ...], int]:
    return count(q, "weight0_type")


def count_by_weight_distribution(q: FactorQuery) -> dict[tuple[tuple[int, ...], ...], int]:
    return count(q, "weight_distribution")


def weight_distribution_poly(q: FactorQuery) -> ExpPoly:
    """Variable i*d + j counts cycles of weight j in factor i."""
    d = q.spec.d
    tally = count(q, "weight_distribution")
    return ExpPoly(q.k * d, {tuple(itertools.chain.from_iterable(key)): c for key, c in tally.items()})


# colorings -------------------------------------------------------------------


def surjective_colorings(cycles: int, colors: int) -> int:
    """Color ``cycles`` objects with ``colors`` colors, every color used."""
    if colors < 0:
        return 0
    return sum((-1) ** j * math.comb(colors, j) * (colors - j) ** cycles for j in range(colors + 1))


def strip_colorings(weight0: int, strips: int, d: int) -> int:
    """Colorings of weight-0 cycles by {0} and strips of d colors, each strip used at least once."""
    if strips < 0:
        return 0
    return sum((-1) ** j * math.comb(strips, j) * ((strips - j) * d + 1) ** weight0 for j in range(strips + 1))


def _factor_colorings(spec: GroupSpec, fd: int, p: int) -> int:
    if spec.family == "sym":
        return surjective_colorings(fd, p)
    return strip_colorings(fd, p, spec.d)


def colored_count(q: FactorQuery, p: Sequence[int]) -> int:
    """Sum over factorizations of the number of colorings of each factor with p_i colors (or strips)."""
    if len(p) != q.k:
        raise ValueError("need one color count per factor")
    poly = count(q, "fixdim")
    total = 0
    for e, c in poly.terms.items():
        total += int(c) * math.prod(_factor_colorings(q.spec, fd, pi) for fd, pi in zip(e, p))
    return total


def colored_count_literal(q: FactorQuery, p: Sequence[int]) -> int:
    """Enumerate the actual color assignments (tiny cases only)."""
    if q.work > q.work_limit:
        raise BudgetExceeded(q.work, q.work_limit)
    spec, d = q.spec, q.spec.d
    elems = _elements(spec)
    target = q.element
    total = 0
    for prefix in itertools.product(elems, repeat=q.k - 1):
        acc = identity(spec)
        for u in prefix:
            acc = acc * u
        factors = (*prefix, acc.inverse() * target)
        if not _keep(factors, q.transitivity, spec.n):
            continue
        ways = 1
        for u, pi in zip(factors, p):
            cyc = u.cycles_with_weights()
            if spec.family == "sym":
                palette = list(range(1, pi + 1))
                need = set(palette)
                choices = [palette for _ in cyc]
            else:
                palette = list(range(pi * d + 1))
                need = set(range(1, pi + 1))
                choices = [palette if wt == 0 else [0] for _, wt in cyc]
            n_ok = 0
            for assign in itertools.product(*choices):
                used = {(col - 1) // d + 1 for col in assign if col} if spec.family != "sym" else set(assign)
                if need <= used:
                    n_ok += 1
            ways *= n_ok
            if not ways:
                break
        total += ways
    return total


def _typed_assignments(lengths: Sequence[int], alpha: Sequence[int], allow_zero: bool, d: int) -> int:
    """Ways to color cycles so color j >= 1 covers total length alpha[j-1] (strip mode: times d per cycle)."""
    ncol = len(alpha)
    palette = list(range(0 if allow_zero else 1, ncol + 1))
    total = 0
    for assign in itertools.product(palette, repeat=len(lengths)):
        sums = [0] * (ncol + 1)
        for ln, col in zip(lengths, assign):
            sums[col] += ln
        if tuple(sums[1:]) == tuple(alpha):
            nonzero = sum(1 for col in assign if col)
            total += d**nonzero if allow_zero else 1
    return total


def colored_count_by_type(q: FactorQuery, alphas: Sequence[Sequence[int]]) -> int:
    """Colored factorizations where color (strip) j of factor i covers total cycle length alphas[i][j]."""
    if len(alphas) != q.k:
        raise ValueError("need one composition per factor")
    tally = count(q, "weight0_type")
    strip = q.spec.family != "sym"
    total = 0
    for types, c in tally.items():
        ways = c
        for lam, alpha in zip(types, alphas):
            ways *= _typed_assignments(lam, alpha, strip, q.spec.d)
            if not ways:
                break
        total += ways
    return total


# reflection factorizations -------------------------------------------------------


def reflection_dp(spec: GroupSpec, ell: int, target: GenPerm | None = None) -> int:
    """Number of ordered ell-tuples of reflections with product ``target`` (default c)."""
    if target is None:
        target = coxeter_element(spec)
    refl = reflections(spec)
    layer: Counter = Counter({identity(spec): 1})
    for _ in range(ell):
        nxt: Counter = Counter()
        for g, c in layer.items():
            for r in refl:
                nxt[g * r] += c
        layer = nxt
    return layer.get(target, 0)


def reflection_dp_counts(spec: GroupSpec, l_max: int, target: GenPerm | None = None) -> list[int]:
    if target is None:
        target = coxeter_element(spec)
    refl = reflections(spec)
    layer: Counter = Counter({identity(spec): 1})
    out = [layer.get(target, 0)]
    for _ in range(l_max):
        nxt: Counter = Counter()
        for g, c in layer.items():
            for r in refl:
                nxt[g * r] += c
        layer = nxt
        out.append(layer.get(target, 0))
    return out


# (n-1)-cycle contraction ---------------------------------------------------------


def n1_contract(u: Permutation, v: Permutation) -> tuple[Permutation, Permutation, int]:
    """Send a transitive factorization u v = (1..n-1)(n) in S_n to one of the n-cycle in S_{n-1}.

    With t = v(n): u' = u (t n) and v' = (t n) v both fix n; the returned
    pair is their restriction to S_{n-1}, plus t (0-based).
    """
    n = u.n
    last = n - 1
    t = v(last)
    swap = Permutation.from_cycles([[t, last]], n) if t != last else Permutation.identity(n)
    u2, v2 = u * swap, swap * v
    if u2(last) != last or v2(last) != last:
        raise ValueError("factorization is not transitive onto n")
    return Permutation(u2.images[:last]), Permutation(v2.images[:last]), t


def n1_expand(u: Permutation, v: Permutation, t: int) -> tuple[Permutation, Permutation]:
    """Inverse of :func:`n1_contract` for 0 <= t < n - 1."""
    m = u.n
    n = m + 1
    big_u = Permutation(u.images + (m,))
    big_v = Permutation(v.images + (m,))
    swap = Permutation.from_cycles([[t, m]], n)
    return big_u * swap, swap * big_v


def transitive_pairs(target: Permutation) -> list[tuple[Permutation, Permutation]]:
    """All (u, v) in S_n with u v = target and <u, v> transitive."""
    from .perm_core import enumerate_sn

    n = target.n
    out = []
    for u in enumerate_sn(n):
        v = u.inverse() * target
        if len(orbits([u, v], n)) == 1:
            out.append((u, v))
    return out
