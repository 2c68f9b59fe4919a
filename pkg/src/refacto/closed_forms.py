"""Closed-form generating polynomials for factorizations of Coxeter elements.

Every evaluator returns an exact ``ExpPoly`` in which variable i tracks the
fixed-space dimension of the i-th factor (or an integer count).  Results are
checked for integrality before they are returned.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Sequence

from .coeffs import (
    d_falling,
    falling,
    m_coeff,
    p_basis,
    psi,
)
from .perm_core import Partition
from .polys import ExpPoly, UniPoly, build_from_basis
from .symfunc import aut, monomial_sym, partitions_upto
from .wreath import GroupSpec, group_order, invariants

MAX_K = 4


class IntegralityError(ArithmeticError):
    """A theorem-level result came out non-integral: a bug, never rounding."""


def _integral(f: ExpPoly, what: str) -> ExpPoly:
    if not f.is_integral():
        bad = next(c for c in f.terms.values() if c.denominator != 1)
        raise IntegralityError(f"{what}: non-integral coefficient {bad}")
    return f


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise IntegralityError(f"{what}: non-integral value {x}")
    return int(x)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > MAX_K:
        raise ValueError(f"k={k} exceeds the configured bound {MAX_K}")


def _basis_sum(
    k: int, lo: int, hi: int, coef: Callable[[tuple[int, ...]], object], basis: Sequence[UniPoly]
) -> ExpPoly:
    coeffs = {}
    for p in itertools.product(range(lo, hi + 1), repeat=k):
        c = coef(p)
        if c:
            coeffs[p] = c
    if not coeffs:
        return ExpPoly(k)
    return build_from_basis(coeffs, list(basis))


def jackson_poly(n: int, k: int) -> ExpPoly:
    """Factorizations of the n-cycle in S_n, by number of cycles of each factor."""
    _check_k(k)
    basis = [falling(p) / math.factorial(p) for p in range(n + 1)]
    f = _basis_sum(k, 1, n, lambda p: m_coeff(n - 1, [x - 1 for x in p]), basis)
    return _integral(f * math.factorial(n) ** (k - 1), "jackson_poly")


def gd1n_poly(d: int, n: int, k: int) -> ExpPoly:
    """Factorizations of the Coxeter element of G(d,1,n), by fixed-space dimension."""
    _check_k(k)
    basis = [d_falling(d, p) / (d**p * math.factorial(p)) for p in range(n + 1)]
    f = _basis_sum(k, 0, n, lambda p: m_coeff(n, p), basis)
    return _integral(f * group_order(GroupSpec.d1n(d, n)) ** (k - 1), "gd1n_poly")


def gddn_transitive_poly(d: int, n: int, k: int) -> ExpPoly:
    """Factorizations of the Coxeter element of G(d,d,n) whose underlying permutations act transitively."""
    _check_k(k)
    basis = [UniPoly()] + [psi(d, p) / (d ** (p - 1) * math.factorial(p - 1)) for p in range(1, n + 1)]
    f = _basis_sum(k, 1, n, lambda p: m_coeff(n, p), basis)
    scale = Fraction(group_order(GroupSpec.ddn(d, n)) ** (k - 1), n**k)
    return _integral(f * scale, "gddn_transitive_poly")


def _q_poly(d: int, p: int) -> UniPoly:
    quad = UniPoly([p * (d - 1), -(d - 1) * (p - 1), 1])
    return quad * d_falling(d, p - 1) / (d**p * math.factorial(p))


def _q_prime_poly(d: int, p: int) -> UniPoly:
    quad = UniPoly([-p, -(d - 1) * (p - 1), 1])
    return quad * d_falling(d, p - 1) / (d**p * math.factorial(p))


def gddn_nontransitive_poly(d: int, n: int, k: int) -> ExpPoly:
    """Factorizations in G(d,d,n) whose underlying permutations fix the point n jointly."""
    _check_k(k)
    q = [UniPoly()] + [_q_poly(d, p) for p in range(1, n)]
    qp = [UniPoly()] + [_q_prime_poly(d, p) for p in range(1, n)]

    def coef(p):
        return m_coeff(n - 2, [x - 1 for x in p])

    f = _basis_sum(k, 1, n - 1, coef, q) - _basis_sum(k, 1, n - 1, coef, qp)
    scale = Fraction(group_order(GroupSpec.ddn(d, n)) ** (k - 1), n ** (k - 1))
    return _integral(f * scale, "gddn_nontransitive_poly")


def gddn_poly(d: int, n: int, k: int) -> ExpPoly:
    return gddn_transitive_poly(d, n, k) + gddn_nontransitive_poly(d, n, k)


def n1cycle_transitive_poly(n: int, k: int) -> ExpPoly:
    """Transitive factorizations of (1 2 ... n-1)(n) in S_n, by number of cycles."""
    _check_k(k)
    basis = [UniPoly()] + [falling(p) / math.factorial(p - 1) for p in range(1, n + 1)]
    f = _basis_sum(k, 1, n, lambda p: m_coeff(n, p), basis)
    return _integral(f * Fraction(math.factorial(n) ** (k - 1), n**k), "n1cycle_transitive_poly")


def theorem_poly(spec: GroupSpec, k: int) -> ExpPoly:
    """The closed form matching ``spec``'s family (all factorizations of its Coxeter element)."""
    if spec.family == "sym":
        return jackson_poly(spec.n, k)
    if spec.family == "d1n":
        return gd1n_poly(spec.d, spec.n, k)
    if spec.family == "ddn":
        return gddn_poly(spec.d, spec.n, k)
    raise ValueError("use characters.exceptional_F for exceptional groups")


# colored counts ---------------------------------------------------------------


def _nonneg(p: Sequence[int]) -> bool:
    return all(x >= 0 for x in p)


def c_sn(n: int, p: Sequence[int]) -> int:
    """Colored factorizations of the n-cycle in S_n, p_i colors used surjectively on factor i."""
    k = len(p)
    if not _nonneg(p):
        return 0
    return math.factorial(n) ** (k - 1) * m_coeff(n - 1, [x - 1 for x in p])


def c_n1(n: int, p: Sequence[int]) -> int:
    """Colored transitive factorizations of the (n-1)-cycle in S_n."""
    k = len(p)
    if not _nonneg(p):
        return 0
    val = Fraction(math.factorial(n) ** (k - 1) * math.prod(p) * m_coeff(n, p), n**k)
    return _as_int(val, "c_n1")


def _indicator(k: int, s: Sequence[int]) -> tuple[int, ...]:
    e = [0] * k
    for i in s:
        e[i] = 1
    return tuple(e)


def _subsets(k: int):
    for r in range(k + 1):
        yield from itertools.combinations(range(k), r)


def _shift(p: Sequence[int], e: Sequence[int], sign: int = 1) -> tuple[int, ...]:
    return tuple(a + sign * b for a, b in zip(p, e))


def c_gd1n(d: int, n: int, p: Sequence[int]) -> int:
    k = len(p)
    total = sum(c_sn(n, _shift(p, _indicator(k, s))) for s in _subsets(k) if s)
    return d ** ((k - 1) * n) * total


def c_gddn_trans(d: int, n: int, p: Sequence[int]) -> int:
    k = len(p)
    total = Fraction(0)
    for s in _subsets(k):
        total += Fraction(d) ** ((k - 1) * n - len(s) + 1) * c_n1(n, _shift(p, _indicator(k, s)))
    return _as_int(total, "c_gddn_trans")


def _c_sn_minus1(n: int, q: Sequence[int]) -> int:
    k = len(q)
    if not _nonneg(q):
        return 0
    return math.factorial(n - 1) ** (k - 1) * m_coeff(n - 2, [x - 1 for x in q])


def b_gddn_nontrans(d: int, n: int, p: Sequence[int]) -> int:
    k = len(p)
    total = Fraction(0)
    for s in _subsets(k):
        sset = set(s)
        rest = [i for i in range(k) if i not in sset]
        weight = math.prod(p[i] for i in rest)
        if not weight:
            continue
        for t in _subsets(k):
            if not sset & set(t):
                continue
            union = len(sset | set(t))
            for u in itertools.chain.from_iterable(itertools.combinations(rest, r) for r in range(len(rest) + 1)):
                q = _shift(_shift(p, _indicator(k, t)), _indicator(k, u), -1)
                total += Fraction(weight * _c_sn_minus1(n, q), d**union)
    return _as_int(total * d ** (n * (k - 1) + 1), "b_gddn_nontrans")


# reflection factorizations and genus 0 ---------------------------------------


def chapuy_stump_counts(spec: GroupSpec, l_max: int) -> list[int]:
    """N_l = number of ordered factorizations of c into l reflections, l = 0..l_max."""
    inv = invariants(spec)
    rank = spec.rank
    out = []
    for ell in range(l_max + 1):
        total = Fraction(0)
        for j in range(rank + 1):
            base = Fraction(j * inv.num_reflections - (rank - j) * inv.num_hyperplanes, rank)
            term = math.comb(rank, j) * base**ell
            total += term if (rank - j) % 2 == 0 else -term
        out.append(_as_int(total / inv.order, "chapuy_stump_counts"))
    return out


def genus0_gd1n(d: int, n: int, s: Sequence[int]) -> int:
    """Chains 1 <= w_1 <= ... <= c in the codim order of G(d,1,n) with rank jumps s."""
    if sum(s) != n or not _nonneg(s):
        raise ValueError("rank jumps must be nonnegative and sum to n")
    return math.prod(math.comb(n, x) for x in s)


def genus0_gddn(d: int, n: int, s: Sequence[int]) -> int:
    """Chains below the Coxeter element of G(d,d,n) with rank jumps s."""
    if sum(s) != n or not _nonneg(s):
        raise ValueError("rank jumps must be nonnegative and sum to n")
    k = len(s)
    b = [math.comb(n - 1, x) for x in s]
    # prod b_i * (d + sum_i binom(n-2, s_i-2) / b_i), written without the division
    total = d * math.prod(b)
    for i in range(k):
        top = math.comb(n - 2, s[i] - 2) if s[i] >= 2 else 0
        total += top * math.prod(b[j] for j in range(k) if j != i)
    return total


def zeta(spec: GroupSpec, k: int) -> int:
    """Number of k-multichains in [1, c] (the zeta polynomial at k)."""
    n, d = spec.n, spec.d
    if spec.family == "d1n":
        return math.comb(n * k, n)
    if spec.family == "ddn":
        return d * math.comb((n - 1) * k, n) + k * math.comb((n - 1) * k - 1, n - 2)
    if spec.family == "sym":
        return math.comb(n * k, n - 1) // n if n > 0 else 1
    raise ValueError("zeta not available for exceptional specs")


def weak_compositions(total: int, k: int):
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, k - 1):
            yield (first,) + rest


# rank 2 and rank 3 -------------------------------------------------------------


def _rank_poly(spec: GroupSpec, k: int, rank: int) -> ExpPoly:
    _check_k(k)
    inv = invariants(spec)
    if len(inv.degrees) != rank:
        raise ValueError(f"{spec} does not have rank {rank}")
    basis = [p_basis(spec, i) for i in range(rank + 1)]
    f = _basis_sum(k, 0, rank, lambda p: m_coeff(rank, p), basis)
    return _integral(f * inv.order ** (k - 1), f"rank{rank}_poly({spec})")


def rank2_poly(spec: GroupSpec, k: int) -> ExpPoly:
    return _rank_poly(spec, k, 2)


def rank3_poly(spec: GroupSpec, k: int) -> ExpPoly:
    return _rank_poly(spec, k, 3)


def rank2_explicit_k2(spec: GroupSpec) -> ExpPoly:
    """The two-factor rank-2 polynomial written out in terms of e*_2, d_1, h and |G|."""
    inv = invariants(spec)
    if len(inv.degrees) != 2:
        raise ValueError("rank 2 only")
    x, y = ExpPoly.var(2, 0), ExpPoly.var(2, 1)
    e2, h, order = inv.coexponents[1], inv.h, inv.order
    big_n = Fraction(2 * h, inv.degrees[0])
    f = (
        (x - 1) * (x - e2)
        + (x - 1) * (y - 1) * big_n
        + (y - 1) * (y - e2)
        + (x - 1) * (2 * h)
        + (y - 1) * (2 * h)
        + order
    )
    return _integral(f, "rank2_explicit_k2")


def g25_poly(spec: GroupSpec, k: int) -> ExpPoly:
    """The G25 formula (prefix basis P_i = prod_{j<=i} (x - e*_j)/d_j)."""
    _check_k(k)
    p1, p2, p3 = (p_basis(spec, i) for i in (1, 2, 3))
    one = UniPoly.const(1)
    pieces = [
        (1, p3 + p2 * 3 + p1 * 3 + one),
        (-3, p3 + p2 * 2 + p1),
        (-3, p3 + p2),
        (-1, p3),
        (-3, p3 + p2 + p1 / 3),
        (9, p3 + p2 + p1 / 9),
    ]
    out = ExpPoly(k)
    for c, u in pieces:
        term = ExpPoly.const(k, c)
        for i in range(k):
            term = term * ExpPoly.from_uni(u, k, i)
        out = out + term
    return _integral(out * invariants(spec).order ** (k - 1), "g25_poly")


# cycle type and all weights ---------------------------------------------------


def cycle_type_rhs(d: int, n: int, k: int, v: int) -> ExpPoly:
    """Factorizations of c in G(d,1,n) by weight-0 cycle type, as a polynomial in k*v variables.

    Factor i contributes its weight-0 cycle type lambda through p_lambda on
    the alphabet (1, y_i1 repeated d times, ..., y_iv repeated d times); the
    result is written in monomial symmetric functions of y_i1..y_iv.
    """
    _check_k(k)
    arity = k * v
    order = group_order(GroupSpec.d1n(d, n))
    # per factor: list of (mu, q, m_mu embedded in block i)
    blocks = []
    for i in range(k):
        entries = []
        for mu, full in _partitions_up_to_n(n):
            q = len(mu) if full else len(mu) + 1
            mono = monomial_sym(mu, v)
            if not mono:
                continue
            emb = mono.map_exponents(lambda e, i=i: (0,) * (i * v) + e + (0,) * ((k - 1 - i) * v), arity)
            entries.append((mu, q, full, emb))
        blocks.append(entries)
    out = ExpPoly(arity)
    for combo in itertools.product(*blocks):
        if all(full for _, _, full, _ in combo):
            continue
        qs = [q for _, q, _, _ in combo]
        m = m_coeff(n - 1, [q - 1 for q in qs])
        if not m:
            continue
        c = Fraction(m, math.prod(math.comb(n - 1, q - 1) for q in qs))
        term = ExpPoly.const(arity, c)
        for *_, emb in combo:
            term = term * emb
        out.add_inplace(term)
    return _integral(out * order ** (k - 1), "cycle_type_rhs")


def _partitions_up_to_n(n: int):
    for size in range(n + 1):
        for mu in partitions_upto(size):
            yield mu, size == n


def genus0_cycle_type(d: int, lambdas: Sequence[Partition], n: int | None = None) -> int:
    """Genus-0 factorizations of c in G(d,1,n) with prescribed weight-0 cycle types."""
    k = len(lambdas)
    sizes = [sum(lam) for lam in lambdas]
    if n is None:
        n = max(sizes)
    if sum(len(lam) for lam in lambdas) != n * (k - 1):
        raise ValueError("genus-0 condition fails: total length must be n(k-1)")
    short = [j for j in range(k) if sizes[j] < n]
    if len(short) != 1:
        return 0
    j = short[0]
    val = Fraction(n ** (k - 1))
    for i, lam in enumerate(lambdas):
        q = len(lam) + 1 if i == j else len(lam)
        val *= Fraction(math.factorial(q - 1), aut(lam))
    return _as_int(val, "genus0_cycle_type")


def all_weights_poly(d: int, n: int, k: int, residue: int = 1) -> ExpPoly:
    """Factorizations of c in G(d,1,n) by the number of cycles of each weight in each factor.

    Variable x_{i,j} (index i*d + j) marks a cycle of weight j in factor i.
    The sum over d-th roots of unity t is carried out in Z[t]/(t^d - 1) and
    the coefficient of t^residue is extracted.  The count of factorizations
    of c is residue 1 (the weight of c); residue 0 is the plain sum over t,
    kept only to show that it does not count factorizations of c.
    """
    _check_k(k)
    arity = k * d
    ext = arity + 1  # last slot carries the power of t
    out = ExpPoly(ext)
    lin = []
    for i in range(k):
        form = ExpPoly(ext)
        for j in range(d):
            e = [0] * ext
            e[i * d + j] = 1
            e[-1] = j
            form.terms[tuple(e)] = Fraction(1, d)
        lin.append(form)
    binoms: list[list[ExpPoly]] = []
    for i in range(k):
        row = [ExpPoly.const(ext, 1)]
        for p in range(1, n + 1):
            row.append(row[-1] * (lin[i] - (p - 1)) / p)
        binoms.append(row)
    for p in itertools.product(range(1, n + 1), repeat=k):
        m = m_coeff(n - 1, [x - 1 for x in p])
        if not m:
            continue
        term = ExpPoly.const(ext, m)
        for i in range(k):
            term = term * binoms[i][p[i]]
        out.add_inplace(term)
    folded = out.map_exponents(lambda e: e[:-1] + (e[-1] % d,), ext)
    result = ExpPoly(arity)
    for e, c in folded.terms.items():
        if e[-1] == residue % d:
            result.terms[e[:-1]] = c
    return _integral(result * (group_order(GroupSpec.d1n(d, n)) ** (k - 1) * d), "all_weights_poly")
