"""Symmetric-function helpers: power sums, monomials, specializations, Hall pairing data."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .perm_core import Partition
from .polys import ExpPoly, UniPoly


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_upto(n: int) -> list[Partition]:
    """Partitions of exactly n (cached list)."""
    return _partitions_cached(n)


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> list[Partition]:
    return list(partitions(n))


def aut(lam: Sequence[int]) -> int:
    """prod of m_i! over part multiplicities m_i."""
    return math.prod(math.factorial(c) for c in Counter(lam).values())


def z(mu: Sequence[int]) -> int:
    """Centralizer size prod_i i^{m_i} m_i! of a permutation of cycle type mu."""
    return math.prod(i**c * math.factorial(c) for i, c in Counter(mu).items())


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hooks(lam: Sequence[int]) -> list[int]:
    """Hook lengths h(i, j) = lam_i - j + lam'_j - i + 1 (1-based i, j), row by row."""
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def contents(lam: Sequence[int]) -> list[int]:
    return [j - i for i in range(len(lam)) for j in range(lam[i])]


def power_sum(lam: Sequence[int], nvars: int) -> ExpPoly:
    """p_lambda(y_1, ..., y_nvars)."""
    out = ExpPoly.const(nvars, 1)
    for part in lam:
        ps = ExpPoly(nvars)
        for i in range(nvars):
            e = [0] * nvars
            e[i] = part
            ps.terms[tuple(e)] = Fraction(1)
        out = out * ps
    return out


def monomial_sym(mu: Sequence[int], nvars: int) -> ExpPoly:
    """m_mu(y_1, ..., y_nvars); zero if mu has more than nvars parts."""
    mu = tuple(x for x in mu if x)
    if len(mu) > nvars:
        return ExpPoly(nvars)
    padded = mu + (0,) * (nvars - len(mu))
    return ExpPoly(nvars, {e: 1 for e in set(itertools.permutations(padded))})


def alphabet_power_sum(d: int, m: int, nvars: int) -> ExpPoly:
    """p_m on the alphabet (1, y_1 x d, ..., y_nvars x d), i.e. d p_m(y) + 1."""
    return power_sum((m,), nvars) * d + 1


def alphabet_power_sum_product(d: int, lam: Sequence[int], nvars: int) -> ExpPoly:
    out = ExpPoly.const(nvars, 1)
    for part in lam:
        out = out * alphabet_power_sum(d, part, nvars)
    return out


def specialize_p(lam: Sequence[int]) -> UniPoly:
    """p_lambda(1^x) = x^{l(lambda)}."""
    return UniPoly.x() ** len(lam)


def specialize_s(lam: Sequence[int]) -> UniPoly:
    """s_lambda(1^x) = prod over cells (x + content) / hook."""
    return UniPoly.from_roots([-c for c in contents(lam)]) / math.prod(hooks(lam))


def specialize_m(lam: Sequence[int]) -> UniPoly:
    """m_lambda(1^x) = binom(x, l) l! / Aut(lambda)."""
    ell = len(lam)
    return UniPoly.from_roots(range(ell)) / aut(lam)


def stable_specializations(lam: Sequence[int]) -> dict[str, UniPoly]:
    return {"p": specialize_p(lam), "s": specialize_s(lam), "m": specialize_m(lam)}


def p_to_m_matrix(n: int) -> tuple[list[Partition], list[list[int]]]:
    """Rows: p_lambda expanded in the m basis (coefficient of y^mu in p_lambda, n variables)."""
    parts = partitions_upto(n)
    rows = []
    for lam in parts:
        f = power_sum(lam, n)
        rows.append([int(f.coeff(tuple(mu) + (0,) * (n - len(mu)))) for mu in parts])
    return parts, rows


def hall_pairing_p_m(n: int) -> dict[tuple[Partition, Partition], Fraction]:
    """<p_lambda, m_mu> for |lambda| = |mu| = n, using <p_lambda, p_mu> = z_lambda delta."""
    import sympy

    parts, rows = p_to_m_matrix(n)
    inv = sympy.Matrix(rows).inv()  # m_mu = sum_lambda inv[mu, lambda] p_lambda
    out = {}
    for a, lam in enumerate(parts):
        for b, mu in enumerate(parts):
            val = inv[b, a]
            out[(lam, mu)] = Fraction(int(val.p), int(val.q)) * z(lam)
    return out
