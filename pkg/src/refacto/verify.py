"""Named identity suites: each runs a closed form against an independent computation."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

from . import characters as ch
from . import closed_forms as cf
from . import coeffs
from . import noncross as nc
from . import oracle as orc
from .polys import ExpPoly
from .symfunc import alphabet_power_sum_product, partitions_upto
from .wreath import GroupSpec, invariants


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def cycle_type_lhs(d: int, n: int, k: int, v: int, workers: int = 1) -> ExpPoly:
    """Oracle side of the cycle-type identity: sum over factorizations of prod_i p_{lambda_i}(1, y_i x d)."""
    tally = orc.count_by_weight0_type(orc.FactorQuery(GroupSpec.d1n(d, n), k, workers=workers))
    arity = k * v
    out = ExpPoly(arity)
    for types, c in tally.items():
        term = ExpPoly.const(arity, c)
        for i, lam in enumerate(types):
            f = alphabet_power_sum_product(d, lam, v)
            term = term * f.map_exponents(lambda e, i=i: (0,) * (i * v) + e + (0,) * ((k - 1 - i) * v), arity)
        out.add_inplace(term)
    return out


def _suite_recurrence() -> list[Check]:
    out = []
    for n in range(1, 6):
        for k in range(1, 4):
            ok = True
            for p in itertools.product(range(n + 1), repeat=k):
                m = coeffs.m_coeff(n, p)
                via_s = sum(
                    coeffs.m_coeff(n - 1, [p[j] - (1 if j in s else 0) for j in range(k)])
                    for r in range(k) for s in itertools.combinations(range(k), r)
                )
                via_t = sum(
                    coeffs.m_coeff(n - 1, [p[j] - 1 + (1 if j in t else 0) for j in range(k)])
                    for r in range(1, k + 1) for t in itertools.combinations(range(k), r)
                )
                if not (m == via_s == via_t) or (n <= 4 and m != coeffs.m_coeff_by_subsets(n, p)):
                    ok = False
            out.append(Check(f"M recurrence n={n} k={k}", ok))
    return out


def _suite_lemma3() -> list[Check]:
    out = []
    for d, n in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        spec = GroupSpec.d1n(d, n)
        out.append(Check(f"gd1n_poly {spec} k=2", cf.gd1n_poly(d, n, 2) == orc.count_by_fixdim(spec, 2)))
    for p in itertools.product(range(3), repeat=2):
        q = orc.FactorQuery(GroupSpec.d1n(2, 2), 2)
        out.append(Check(f"colored G(2,1,2) p={p}", orc.colored_count(q, p) == cf.c_gd1n(2, 2, p)))
    return out


def _suite_ddn(mode: str) -> list[Check]:
    fn = cf.gddn_transitive_poly if mode == "transitive" else cf.gddn_nontransitive_poly
    lemma = cf.c_gddn_trans if mode == "transitive" else cf.b_gddn_nontrans
    out = []
    for d, n in [(2, 3), (3, 3), (2, 4), (3, 2), (4, 2)]:
        spec = GroupSpec.ddn(d, n)
        got = orc.count_by_fixdim(spec, 2, transitivity=mode)
        out.append(Check(f"{mode} {spec} k=2", fn(d, n, 2) == got))
    for p in itertools.product(range(3), repeat=2):
        q = orc.FactorQuery(GroupSpec.ddn(2, 3), 2, transitivity=mode)
        out.append(Check(f"colored {mode} G(2,2,3) p={p}", orc.colored_count(q, p) == lemma(2, 3, p)))
    return out


def _suite_chapuy_stump() -> list[Check]:
    out = []
    for spec in [GroupSpec.d1n(2, 2), GroupSpec.d1n(2, 3), GroupSpec.d1n(3, 2), GroupSpec.ddn(2, 3), GroupSpec.ddn(3, 3)]:
        formula = cf.chapuy_stump_counts(spec, 6)
        inv = invariants(spec)
        minimal = math.factorial(spec.n) * inv.h**spec.n // inv.order
        out.append(Check(f"N_l {spec} l<=6", formula == orc.reflection_dp_counts(spec, 6), str(formula)))
        out.append(Check(f"N_n {spec} = n! h^n/|W|", formula[spec.n] == minimal))
    return out


def _suite_genus0() -> list[Check]:
    out = []
    specs = [GroupSpec.d1n(2, 2), GroupSpec.d1n(3, 2), GroupSpec.d1n(2, 3), GroupSpec.ddn(2, 3), GroupSpec.ddn(3, 3)]
    for spec in specs:
        iv = nc.interval(spec)
        for k in (2, 3):
            closed = cf.genus0_gd1n if spec.family == "d1n" else cf.genus0_gddn
            ok = all(
                nc.chains_by_rank_jumps(spec, k, s, iv) == closed(spec.d, spec.n, s)
                for s in cf.weak_compositions(spec.n, k)
            )
            out.append(Check(f"chains {spec} k={k}", ok))
            out.append(Check(f"zeta {spec} k={k}", nc.zeta_by_chains(spec, k) == cf.zeta(spec, k)))
    return out


def _suite_alt_nc() -> list[Check]:
    out = []
    for spec in [GroupSpec.d1n(2, 2), GroupSpec.d1n(3, 2), GroupSpec.ddn(2, 3), GroupSpec.ddn(3, 3)]:
        a, b = nc.interval(spec, order="codim"), nc.interval(spec, order="refl")
        out.append(Check(f"codim interval = refl interval {spec}", a.rank == b.rank))
        out.append(Check(f"|[1,c]| = Catalan {spec}", len(a) == nc.catalan_number(spec), str(len(a))))
    return out


def _suite_cycle_type() -> list[Check]:
    out = []
    for d, n, k in [(2, 2, 2), (2, 3, 2), (3, 2, 2)]:
        out.append(Check(f"cycle type G({d},1,{n}) k={k}", cf.cycle_type_rhs(d, n, k, n) == cycle_type_lhs(d, n, k, n)))
    return out


def _suite_all_weights() -> list[Check]:
    out = []
    for d, n, k in [(2, 1, 2), (2, 2, 2), (3, 2, 2)]:
        q = orc.FactorQuery(GroupSpec.d1n(d, n), k)
        out.append(Check(
            f"all weights G({d},1,{n}) k={k}",
            cf.all_weights_poly(d, n, k) == orc.weight_distribution_poly(q),
            "coefficient of t^1 (the weight of c); the plain sum over roots of unity does not match",
        ))
    return out


def _suite_rank(rank: int) -> list[Check]:
    out = []
    fn = cf.rank2_poly if rank == 2 else cf.rank3_poly
    wreath = [GroupSpec.d1n(2, rank), GroupSpec.d1n(3, rank), GroupSpec.ddn(3, rank), GroupSpec.ddn(4, rank)]
    for spec in wreath:
        out.append(Check(f"rank{rank}_poly {spec} k=2", fn(spec, 2) == cf.theorem_poly(spec, 2)))
    for name in ch.bundled_tables():
        t = ch.load_char_table(name)
        if t.rank != rank:
            continue
        spec = t.spec()
        for k in (2, 3):
            table_f = ch.exceptional_F(t, k)
            if name == "G25":
                out.append(Check(f"G25 formula k={k}", table_f == cf.g25_poly(spec, k)))
            else:
                out.append(Check(f"rank{rank}_poly {name} k={k}", table_f == fn(spec, k)))
    return out


def _suite_char_identities() -> list[Check]:
    out = []
    for name in ch.bundled_tables():
        rep = ch.char_poly_identity_check(ch.load_char_table(name))
        out.append(Check(f"table identities {name}", rep.ok, "; ".join(rep.details)))
    for n in range(1, 7):
        out.append(Check(f"column orthogonality S{n}", ch.column_orthogonality(n)))
    for n in range(1, 8):
        ok = all(ch.g_lambda(lam) == ch.g_lambda_contents(lam) for lam in partitions_upto(n))
        out.append(Check(f"g_lambda two ways n={n}", ok))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "recurrence-Ms": _suite_recurrence,
    "lemma-3": _suite_lemma3,
    "lemma-4-trans": lambda: _suite_ddn("transitive"),
    "lemma-4-nontrans": lambda: _suite_ddn("nontransitive"),
    "chapuy-stump": _suite_chapuy_stump,
    "genus0": _suite_genus0,
    "alt-nc": _suite_alt_nc,
    "cycle-type": _suite_cycle_type,
    "all-weights": _suite_all_weights,
    "rank2": lambda: _suite_rank(2),
    "rank3": lambda: _suite_rank(3),
    "char-identities": _suite_char_identities,
}


def run_suite(name: str) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name]()
