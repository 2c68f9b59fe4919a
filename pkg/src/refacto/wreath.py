"""The groups G(d,1,n) and G(d,d,n) as generalized permutations [pi; a].

An element [pi; a] is the monomial matrix with entry w^{a_j} in position
(pi(j), j), w = exp(2 pi i / d).  The product law is

    [pi; a] * [s; b] = [pi s; s(a) + b],   s(a)_j = a_{s(j)},

which is plain matrix multiplication.  The symmetric group is handled as the
d = 1 case, so every element type in this module is a ``GenPerm``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

from .perm_core import Partition, Permutation, cycles, enumerate_sn

MultiPartition = tuple[Partition, ...]

DEFAULT_ENUM_LIMIT = 10**7


class GenPerm:
    __slots__ = ("perm", "weights", "d", "_hash")

    def __init__(self, perm: Permutation, weights: Sequence[int] | None = None, d: int = 1):
        if d < 1:
            raise ValueError("d must be >= 1")
        if weights is None:
            weights = (0,) * perm.n
        if len(weights) != perm.n:
            raise ValueError("need one weight per point")
        self.perm = perm
        self.weights: tuple[int, ...] = tuple(w % d for w in weights)
        self.d = d
        self._hash = hash((perm.images, self.weights, d))

    @classmethod
    def identity(cls, n: int, d: int = 1) -> GenPerm:
        return cls(Permutation.identity(n), None, d)

    @classmethod
    def parse(cls, perm: str, weights: Sequence[int], d: int) -> GenPerm:
        """``GenPerm.parse("(1532)(4)", (1, 2, 2, 0, 1), 3)``."""
        return cls(Permutation.parse(perm, len(weights)), weights, d)

    @property
    def n(self) -> int:
        return self.perm.n

    def __mul__(self, other: GenPerm) -> GenPerm:
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GenPerm)
            and self.d == other.d
            and self.perm.images == other.perm.images
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: GenPerm) -> bool:
        return (self.perm.images, self.weights) < (other.perm.images, other.weights)

    def inverse(self) -> GenPerm:
        return inverse(self)

    def cycles_with_weights(self) -> list[tuple[tuple[int, ...], int]]:
        w = self.weights
        return [(c, sum(w[j] for j in c) % self.d) for c in cycles(self.perm)]

    def fixdim(self) -> int:
        return fixdim(self)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.weights)

    def __str__(self) -> str:
        if self.d == 1:
            return str(self.perm)
        return f"[{self.perm}; ({', '.join(map(str, self.weights))})]"

    __repr__ = __str__


def multiply(u: GenPerm, v: GenPerm) -> GenPerm:
    if u.n != v.n or u.d != v.d:
        raise ValueError(f"cannot multiply elements of different groups (n={u.n},{v.n}; d={u.d},{v.d})")
    d = u.d
    a, b, s = u.weights, v.weights, v.perm.images
    pi = u.perm.images
    w = tuple((a[s[j]] + b[j]) % d for j in range(len(s)))
    return GenPerm(Permutation(tuple(pi[j] for j in s), check=False), w, d)


def inverse(u: GenPerm) -> GenPerm:
    pinv = u.perm.inverse()
    a = u.weights
    return GenPerm(pinv, tuple(-a[pinv.images[j]] for j in range(u.n)), u.d)


def weight0_cycle_type(u: GenPerm) -> Partition:
    return tuple(sorted((len(c) for c, wt in u.cycles_with_weights() if wt == 0), reverse=True))


def fixdim(u: GenPerm) -> int:
    """Dimension of the fixed space: the number of weight-0 cycles."""
    return sum(1 for _, wt in u.cycles_with_weights() if wt == 0)


def conjugacy_index(u: GenPerm) -> MultiPartition:
    parts: list[list[int]] = [[] for _ in range(u.d)]
    for c, wt in u.cycles_with_weights():
        parts[wt].append(len(c))
    return tuple(tuple(sorted(p, reverse=True)) for p in parts)


def total_weight(u: GenPerm) -> int:
    return sum(u.weights) % u.d


def in_ddn(u: GenPerm) -> bool:
    return total_weight(u) == 0


@dataclass(frozen=True)
class GroupSpec:
    """Which group: ``sym``, ``d1n`` (G(d,1,n)), ``ddn`` (G(d,d,n)) or ``exceptional``."""

    family: str
    n: int
    d: int = 1
    name: str = ""
    table: Any = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.family not in ("sym", "d1n", "ddn", "exceptional"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("d1n", "ddn") and self.d < 2:
            raise ValueError("wreath families need d >= 2; use sym for d = 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.family == "ddn" and self.n < 2:
            raise ValueError("G(d,d,n) needs n >= 2")

    @classmethod
    def sym(cls, n: int) -> GroupSpec:
        return cls("sym", n, 1, f"S{n}")

    @classmethod
    def d1n(cls, d: int, n: int) -> GroupSpec:
        return cls("d1n", n, d, f"G({d},1,{n})")

    @classmethod
    def ddn(cls, d: int, n: int) -> GroupSpec:
        return cls("ddn", n, d, f"G({d},{d},{n})")

    @classmethod
    def exceptional(cls, table) -> GroupSpec:
        return cls("exceptional", len(table.degrees), 1, table.group, table)

    @property
    def is_wreath(self) -> bool:
        return self.family in ("sym", "d1n", "ddn")

    @property
    def rank(self) -> int:
        """Rank of the irreducible reflection representation (n - 1 for S_n)."""
        return self.n - 1 if self.family == "sym" else self.n

    def __str__(self) -> str:
        return self.name or f"{self.family}({self.d},{self.n})"


@dataclass(frozen=True)
class Invariants:
    degrees: tuple[int, ...]
    coexponents: tuple[int, ...]
    h: int
    num_reflections: int
    num_hyperplanes: int
    order: int


def invariants(spec: GroupSpec) -> Invariants:
    n, d = spec.n, spec.d
    if spec.family == "sym":
        degrees = tuple(range(2, n + 1))
        coexps = tuple(range(1, n))
    elif spec.family == "d1n":
        degrees = tuple(d * i for i in range(1, n + 1))
        coexps = tuple(1 + d * (i - 1) for i in range(1, n + 1))
    elif spec.family == "ddn":
        degrees = tuple(sorted([d * i for i in range(1, n)] + [n]))
        coexps = tuple(sorted([1 + d * i for i in range(n - 1)] + [(n - 1) * (d - 1)]))
    else:
        degrees = tuple(spec.table.degrees)
        coexps = tuple(spec.table.coexponents)
    order = math.prod(degrees)
    h = max(degrees) if degrees else 1
    num_hyp = sum(coexps)
    num_refl = len(degrees) * h - num_hyp
    return Invariants(degrees, coexps, h, num_refl, num_hyp, order)


def coxeter_element(spec: GroupSpec) -> GenPerm:
    n, d = spec.n, spec.d
    if spec.family == "sym":
        return GenPerm(Permutation.from_cycles([list(range(n))], n))
    if spec.family == "d1n":
        return GenPerm(Permutation.from_cycles([list(range(n))], n), (0,) * (n - 1) + (1,), d)
    if spec.family == "ddn":
        w = [0] * n
        w[n - 2] = 1
        w[n - 1] = -1
        return GenPerm(Permutation.from_cycles([list(range(n - 1))], n), w, d)
    raise ValueError("exceptional groups are described by character tables only")


def identity(spec: GroupSpec) -> GenPerm:
    return GenPerm.identity(spec.n, spec.d)


def reflections(spec: GroupSpec) -> list[GenPerm]:
    n, d = spec.n, spec.d
    if not spec.is_wreath:
        raise ValueError("reflections are only built for wreath families")
    out = []
    if spec.family == "d1n":
        for i in range(n):
            for a in range(1, d):
                w = [0] * n
                w[i] = a
                out.append(GenPerm(Permutation.identity(n), w, d))
    for i, j in itertools.combinations(range(n), 2):
        t = Permutation.from_cycles([[i, j]], n)
        for s in range(d):
            w = [0] * n
            w[i] = s
            w[j] = -s
            out.append(GenPerm(t, w, d))
    return out


def group_order(spec: GroupSpec) -> int:
    n, d = spec.n, spec.d
    if spec.family == "sym":
        return math.factorial(n)
    if spec.family == "d1n":
        return d**n * math.factorial(n)
    if spec.family == "ddn":
        return d ** (n - 1) * math.factorial(n)
    return invariants(spec).order


def enumerate_group(spec: GroupSpec, limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[GenPerm]:
    """Permutations in lexicographic order, then weight vectors as base-d counters."""
    if not spec.is_wreath:
        raise ValueError("exceptional groups cannot be enumerated")
    size = group_order(spec)
    if size > limit:
        raise ValueError(f"|{spec}| = {size} exceeds the enumeration limit {limit}")
    n, d = spec.n, spec.d
    free = n if spec.family == "d1n" else (n - 1 if spec.family == "ddn" else 0)
    weight_vectors = []
    for digits in itertools.product(range(d), repeat=free):
        w = list(digits)
        if spec.family == "ddn":
            w.append(-sum(digits) % d)
        elif spec.family == "sym":
            w = [0] * n
        weight_vectors.append(tuple(w))
    for p in enumerate_sn(n):
        for w in weight_vectors:
            yield GenPerm(p, w, d)


def fixdim_distribution(spec: GroupSpec) -> dict[int, int]:
    out: dict[int, int] = {}
    for g in enumerate_group(spec):
        f = fixdim(g)
        out[f] = out.get(f, 0) + 1
    return out
