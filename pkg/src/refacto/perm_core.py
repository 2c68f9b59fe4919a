"""Permutations of {0, ..., n-1}.

Points are stored 0-based.  Cycle notation for input and display is
1-based, so ``Permutation.parse("(1532)(4)", 5)`` sends 1 -> 5 -> 3 -> 2 -> 1.
Composition ``p * q`` applies q first.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int], check: bool = True):
        self.images: tuple[int, ...] = tuple(images)
        if check and sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation of 0..{len(self.images) - 1}")
        self._hash = hash(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        """Build from 0-based cycles; points not mentioned are fixed."""
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < n or a in seen:
                    raise ValueError(f"bad cycle {cyc} for n={n}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a] = b
        return cls(img, check=False)

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse 1-based cycle notation such as ``(1532)(4)`` or ``(1 5 3 2)``.

        Inside a cycle, points are separated by spaces or commas; with no
        separators each digit is one point (so only n <= 9 is unambiguous).
        Text without parentheses is one-line notation: ``"21345"`` swaps 1 and 2.
        """
        text = text.strip()
        if text and "(" not in text:
            pts = [int(t) for t in re.split(r"[\s,]+", text)] if re.search(r"[\s,]", text) else [int(c) for c in text]
            if len(pts) != n:
                raise ValueError(f"one-line notation needs {n} entries, got {len(pts)}")
            return cls([p - 1 for p in pts])
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            body = body.strip()
            if not body:
                continue
            if re.search(r"[\s,]", body):
                pts = [int(t) for t in re.split(r"[\s,]+", body) if t]
            else:
                pts = [int(ch) for ch in body]
            cycles.append([p - 1 for p in pts])
        return cls.from_cycles(cycles, n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def num_cycles(self) -> int:
        return len(cycles(self))

    def sign(self) -> int:
        return -1 if (self.n - self.num_cycles()) % 2 else 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __str__(self) -> str:
        sep = "" if self.n <= 9 else " "
        return "".join("(" + sep.join(str(a + 1) for a in c) + ")" for c in cycles(self))

    def __repr__(self) -> str:
        return f"Permutation.parse('{self}', {self.n})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p o q, i.e. i -> p(q(i))."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    pi = p.images
    return Permutation(tuple(pi[j] for j in q.images), check=False)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, sorted by minimum; fixed points included."""
    seen = [False] * p.n
    out = []
    for start in range(p.n):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p.images[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def orbits(ps: Sequence[Permutation], n: int) -> list[set[int]]:
    """Orbits of the group generated by ``ps`` on {0..n-1} (union-find)."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in ps:
        for i, j in enumerate(p.images):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, set[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), set()).add(i)
    return sorted(groups.values(), key=min)


def is_transitive(ps: Sequence[Permutation], n: int) -> bool:
    if n <= 1:
        return True
    return len(orbits(ps, n)) == 1


def enumerate_sn(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for img in itertools.permutations(range(n)):
        yield Permutation(img, check=False)


def long_cycle(n: int) -> Permutation:
    """(1 2 ... n)."""
    return Permutation.from_cycles([list(range(n))], n)


def transposition(i: int, j: int, n: int) -> Permutation:
    return Permutation.from_cycles([[i, j]], n) if i != j else Permutation.identity(n)
