import itertools
from fractions import Fraction

import pytest

from refacto import closed_forms as cf
from refacto import oracle as orc
from refacto.polys import ExpPoly
from refacto.wreath import GroupSpec, group_order

# frozen from the brute-force oracle
S3_K2 = {(1, 1): 1, (1, 3): 1, (2, 2): 3, (3, 1): 1}
S4_K2 = {(1, 2): 5, (1, 4): 1, (2, 1): 5, (2, 3): 6, (3, 2): 6, (4, 1): 1}
G212_K2 = {(0, 0): 2, (0, 2): 1, (1, 1): 4, (2, 0): 1}
G312_K2 = {(0, 0): 6, (0, 1): 3, (0, 2): 1, (1, 0): 3, (1, 1): 4, (2, 0): 1}
G223_TRANS = {(0, 1): 4, (1, 0): 4, (1, 2): 4, (2, 1): 4}
G223_NONTRANS = {(0, 1): 1, (0, 3): 1, (1, 0): 1, (1, 2): 2, (2, 1): 2, (3, 0): 1}
S4_N1_TRANS = {(1, 1): 3, (1, 3): 3, (2, 2): 9, (3, 1): 3}


def test_frozen_values():
    assert cf.jackson_poly(3, 2).as_int_dict() == S3_K2
    assert cf.jackson_poly(4, 2).as_int_dict() == S4_K2
    assert cf.gd1n_poly(2, 2, 2).as_int_dict() == G212_K2
    assert cf.gd1n_poly(3, 2, 2).as_int_dict() == G312_K2
    assert cf.gddn_transitive_poly(2, 3, 2).as_int_dict() == G223_TRANS
    assert cf.gddn_nontransitive_poly(2, 3, 2).as_int_dict() == G223_NONTRANS
    assert cf.n1cycle_transitive_poly(4, 2).as_int_dict() == S4_N1_TRANS


def test_k1_is_the_element_itself():
    assert cf.jackson_poly(5, 1) == ExpPoly.monomial((1,))
    assert cf.gd1n_poly(3, 4, 1) == ExpPoly.monomial((0,))
    assert cf.gddn_poly(3, 4, 1) == ExpPoly.monomial((0,))


@pytest.mark.parametrize("spec", [GroupSpec.sym(4), GroupSpec.d1n(2, 3), GroupSpec.d1n(3, 3), GroupSpec.ddn(3, 3),
                                  GroupSpec.ddn(2, 4), GroupSpec.d1n(2, 5)], ids=str)
@pytest.mark.parametrize("k", [2, 3])
def test_total_count_is_group_power(spec, k):
    f = cf.theorem_poly(spec, k)
    assert f.evaluate([1] * k) == group_order(spec) ** (k - 1)
    assert f.is_nonnegative()


@pytest.mark.parametrize("k", [2, 3])
def test_symmetric_in_factors(k):
    f = cf.gd1n_poly(2, 3, k)
    for perm in itertools.permutations(range(k)):
        assert f.map_exponents(lambda e, perm=perm: tuple(e[i] for i in perm), k) == f


def test_gddn_parts_sum():
    for d, n in [(2, 3), (3, 3), (2, 4), (4, 2)]:
        assert cf.gddn_transitive_poly(d, n, 2) + cf.gddn_nontransitive_poly(d, n, 2) == cf.gddn_poly(d, n, 2)


def test_k_bound():
    with pytest.raises(ValueError):
        cf.jackson_poly(3, cf.MAX_K + 1)


def test_gd1n_specializes_all_weights():
    for d, n, k in [(2, 2, 2), (3, 2, 2), (2, 3, 2)]:
        f = cf.all_weights_poly(d, n, k)
        images = []
        for i in range(k):
            for j in range(d):
                images.append(ExpPoly.var(k, i) if j == 0 else ExpPoly.const(k, 1))
        assert f.substitute(images) == cf.gd1n_poly(d, n, k)


def test_residue_zero_reading_differs():
    q = orc.FactorQuery(GroupSpec.d1n(2, 2), 2)
    assert cf.all_weights_poly(2, 2, 2, residue=0) != orc.weight_distribution_poly(q)


def test_colored_lemmas_against_oracle():
    for p in itertools.product(range(3), repeat=2):
        assert cf.c_sn(3, p) == orc.colored_count(orc.FactorQuery(GroupSpec.sym(3), 2), p)
        assert cf.c_gd1n(3, 2, p) == orc.colored_count(orc.FactorQuery(GroupSpec.d1n(3, 2), 2), p)


def test_chapuy_stump_frozen():
    assert cf.chapuy_stump_counts(GroupSpec.d1n(2, 2), 6) == [0, 0, 4, 0, 64, 0, 1024]
    assert cf.chapuy_stump_counts(GroupSpec.d1n(2, 3), 6) == [0, 0, 0, 27, 0, 2430, 0]
    assert cf.chapuy_stump_counts(GroupSpec.ddn(3, 3), 6) == [0, 0, 0, 24, 0, 2160, 0]


def test_zeta_values():
    assert cf.zeta(GroupSpec.d1n(5, 2), 2) == 6
    assert cf.zeta(GroupSpec.d1n(2, 3), 3) == 84
    # G(2,2,4) is type D4, whose Catalan number is 50
    assert cf.zeta(GroupSpec.ddn(2, 4), 2) == 50


def test_genus0_closed_forms_sum_to_zeta():
    for spec in [GroupSpec.d1n(3, 3), GroupSpec.ddn(3, 4)]:
        closed = cf.genus0_gd1n if spec.family == "d1n" else cf.genus0_gddn
        for k in (2, 3):
            total = sum(closed(spec.d, spec.n, s) for s in cf.weak_compositions(spec.n, k))
            assert total == cf.zeta(spec, k)


def _genus0_oracle(d, n, k):
    tally = orc.count_by_weight0_type(orc.FactorQuery(GroupSpec.d1n(d, n), k))
    return {key: c for key, c in tally.items() if sum(len(lam) for lam in key) == n * (k - 1)}


@pytest.mark.parametrize("d,n,k", [(2, 2, 2), (3, 2, 2), (2, 3, 2), (2, 2, 3)])
def test_genus0_cycle_type_matches_oracle(d, n, k):
    table = _genus0_oracle(d, n, k)
    assert table
    for key, c in table.items():
        assert cf.genus0_cycle_type(d, key, n) == c


def test_genus0_cycle_type_independent_of_d():
    assert _genus0_oracle(2, 3, 2) == _genus0_oracle(3, 3, 2)


def test_genus0_cycle_type_rejects_higher_genus():
    with pytest.raises(ValueError):
        cf.genus0_cycle_type(2, [(1, 1), (1, 1)], 2)


def test_cycle_type_rhs_specializes_to_gd1n():
    # y = 0 keeps only the constant 1 in each power sum: every factor weighs 1
    f = cf.cycle_type_rhs(2, 2, 2, 2)
    assert f.evaluate([0] * 4) == group_order(GroupSpec.d1n(2, 2))


def test_integrality_guard():
    assert all(isinstance(c, Fraction) and c.denominator == 1 for _, c in cf.gd1n_poly(4, 3, 2))
