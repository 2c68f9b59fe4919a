import itertools

import pytest
from hypothesis import given, strategies as st

from refacto.coeffs import (
    d_falling,
    falling,
    m3_closed_form,
    m_coeff,
    m_coeff_by_subsets,
    p_basis,
    p_basis_list,
)
from refacto.polys import UniPoly
from refacto.wreath import GroupSpec, invariants


@pytest.mark.parametrize("n,k", [(n, k) for n in range(0, 5) for k in range(1, 4)])
def test_m_coeff_matches_subset_count(n, k):
    for p in itertools.product(range(n + 1), repeat=k):
        assert m_coeff(n, p) == m_coeff_by_subsets(n, p)


@given(st.integers(1, 7), st.lists(st.integers(0, 7), min_size=1, max_size=3))
def test_m_recurrence(n, p):
    k = len(p)
    via_s = sum(
        m_coeff(n - 1, [p[j] - (j in s) for j in range(k)])
        for r in range(k) for s in itertools.combinations(range(k), r)
    )
    assert m_coeff(n, p) == via_s


def test_m_small_values():
    # k = 1: only the empty subset is proper
    assert m_coeff(4, [0]) == 1 and m_coeff(4, [1]) == 0
    assert m_coeff(2, [1, 1]) == 2
    assert m_coeff(3, [1, 1]) == 6


@pytest.mark.parametrize("p", list(itertools.product(range(4), repeat=2)) + [(3, 2, 1, 0), (2, 2, 2), (3, 3, 1)])
def test_m3_closed_form(p):
    assert m3_closed_form(p) == m_coeff(3, p)


def test_falling_factorials():
    x = UniPoly.x()
    assert falling(3) == x * (x - 1) * (x - 2)
    assert d_falling(2, 3) == (x - 1) * (x - 3) * (x - 5)


@pytest.mark.parametrize("spec", [GroupSpec.d1n(2, 3), GroupSpec.ddn(3, 3), GroupSpec.d1n(3, 2), GroupSpec.ddn(4, 2)], ids=str)
def test_p_basis_shape(spec):
    basis = p_basis_list(spec)
    inv = invariants(spec)
    assert len(basis) == spec.rank + 1
    assert basis[0] == UniPoly.const(1)
    for i, b in enumerate(basis[1:], 1):
        assert b.degree == i
        assert b(1) == 0
    # the top basis element vanishes at every coexponent
    assert all(basis[-1](e) == 0 for e in inv.coexponents)
    assert p_basis(spec, 1) == basis[1]
