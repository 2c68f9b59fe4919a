"""The coefficients M^n_p and the univariate bases the closed forms are written in.

M^n_p is the coefficient of x_1^{p_1} ... x_k^{p_k} in
((1 + x_1) ... (1 + x_k) - x_1 ... x_k)^n, equivalently the number of
n-tuples of proper subsets of {1..k} in which j lies in exactly p_j of them.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polys import ExpPoly, UniPoly, build_from_basis, expand_in_basis  # noqa: F401  (re-exported)
from .wreath import GroupSpec, invariants


@lru_cache(maxsize=None)
def _m_coeff(n: int, p: tuple[int, ...]) -> int:
    if n < 0 or any(x < 0 for x in p):
        return 0
    total = 0
    for t in range(min(min(p, default=0), n) + 1):
        term = math.comb(n, t)
        for x in p:
            term *= math.comb(n - t, x - t)
        total += -term if t % 2 else term
    return total


def m_coeff(n: int, p: Sequence[int]) -> int:
    """Alternating-sum formula; 0 for negative n or negative entries."""
    return _m_coeff(n, tuple(p))


def m_coeff_by_subsets(n: int, p: Sequence[int]) -> int:
    """Count n-tuples of proper subsets of range(k) with element j in p[j] of them."""
    k = len(p)
    if n < 0 or any(x < 0 for x in p):
        return 0
    proper = [s for r in range(k) for s in itertools.combinations(range(k), r)]
    target = tuple(p)
    count = 0
    for tup in itertools.product(proper, repeat=n):
        hits = [0] * k
        for s in tup:
            for j in s:
                hits[j] += 1
        if tuple(hits) == target:
            count += 1
    return count


def m3_closed_form(p: Sequence[int]) -> int:
    """M^3_p from the multiplicities a, b, c, e of the values 3, 2, 1, 0 in p."""
    if any(x < 0 or x > 3 for x in p):
        return 0
    b = sum(1 for x in p if x == 2)
    c = sum(1 for x in p if x == 1)
    e = sum(1 for x in p if x == 0)
    if e > 0:
        return 3 ** (b + c)
    if c > 0:
        return 3 ** (b + c) - 3 * 2**b
    if b > 0:
        return 3**b - 3 * 2**b + 3
    return 0


def falling(p: int) -> UniPoly:
    """(x)_p = x (x - 1) ... (x - p + 1)."""
    return UniPoly.from_roots(range(p))


def d_falling(d: int, p: int) -> UniPoly:
    """(x - 1)^{(d)}_p = prod_{i=1}^{p} (x - 1 - (i - 1) d)."""
    return UniPoly.from_roots(1 + i * d for i in range(p))


def psi(d: int, k: int) -> UniPoly:
    """Psi_k = (x - (k - 1)(d - 1)) (x - 1)^{(d)}_{k - 1}; Psi_0 = 1."""
    if k == 0:
        return UniPoly.const(1)
    return UniPoly.from_roots([(k - 1) * (d - 1)]) * d_falling(d, k - 1)


def binom_poly(p: int) -> UniPoly:
    """binom(x, p) as a polynomial in x."""
    return falling(p) / math.factorial(p)


def _prefix_basis(degrees: Sequence[int], coexps: Sequence[int], i: int) -> UniPoly:
    out = UniPoly.const(1)
    for j in range(i):
        out = out * UniPoly.from_roots([coexps[j]]) / degrees[j]
    return out


# (roots, scale) of P_1, P_2, P_3 for the rank-3 groups with their own normalization
_RANK3_SPECIAL = {
    "G24": [((1,), Fraction(1, 3)), ((1, 7), Fraction(1, 24)), ((1, 9, 11), Fraction(1, 336))],
    "G27": [((1,), Fraction(2, 9)), ((1, 15), Fraction(1, 72)), ((1, 19, 25), Fraction(1, 2160))],
}


def p_basis(spec: GroupSpec, i: int) -> UniPoly:
    """The basis polynomial P_i attached to a rank-2 or rank-3 group (or G32).

    Rank 2 uses P_1 = (x - 1)/d_1 and P_2 = (x - e*_1)(x - e*_2)/|G|.
    Rank 3 uses the prefix products prod_{j<=i} (x - e*_j)/d_j except for
    G(d,d,3), G24 and G27, which have their own normalizations.
    """
    if i == 0:
        return UniPoly.const(1)
    inv = invariants(spec)
    rank = len(inv.degrees)
    if not 0 <= i <= rank:
        raise ValueError(f"P_{i} undefined for rank {rank}")
    if rank == 2:
        if i == 1:
            return UniPoly.from_roots([1]) / inv.degrees[0]
        return UniPoly.from_roots(inv.coexponents) / inv.order
    if spec.family == "ddn" and spec.n == 3:
        d = spec.d
        if i == 1:
            return UniPoly.from_roots([1], Fraction(d + 1, 3 * d))
        if i == 2:
            return UniPoly.from_roots([1, d], Fraction(1, 3 * d))
        return UniPoly.from_roots([1, d + 1, 2 * d - 2], Fraction(1, 6 * d * d))
    if spec.family == "exceptional" and spec.name in _RANK3_SPECIAL:
        roots, scale = _RANK3_SPECIAL[spec.name][i - 1]
        return UniPoly.from_roots(roots, scale)
    return _prefix_basis(inv.degrees, inv.coexponents, i)


def p_basis_list(spec: GroupSpec) -> list[UniPoly]:
    rank = len(invariants(spec).degrees)
    return [p_basis(spec, i) for i in range(rank + 1)]


def compositions_box(k: int, hi: int, lo: int = 0):
    """All p in {lo..hi}^k."""
    return itertools.product(range(lo, hi + 1), repeat=k)
