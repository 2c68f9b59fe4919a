import math

import pytest

from refacto.wreath import (
    GenPerm,
    GroupSpec,
    coxeter_element,
    enumerate_group,
    fixdim_distribution,
    group_order,
    invariants,
    reflections,
)

SPECS = [GroupSpec.sym(4), GroupSpec.d1n(2, 3), GroupSpec.d1n(3, 2), GroupSpec.ddn(2, 3),
         GroupSpec.ddn(3, 3), GroupSpec.ddn(4, 2)]


def test_product_example():
    u = GenPerm.parse("(1532)(4)", (1, 2, 2, 0, 1), 3)
    v = GenPerm.parse("(134)(25)", (1, 2, 0, 2, 2), 3)
    assert u * v == GenPerm.parse("(12345)", (0, 0, 0, 0, 1), 3)


def test_fixdim_counts_weight_zero_cycles():
    u = GenPerm.parse("(12)(3)(4)", (1, 0, 0, 2), 3)
    assert u.fixdim() == 1  # only (3) has weight 0
    assert coxeter_element(GroupSpec.d1n(3, 4)).fixdim() == 0


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_order_and_invariants(spec):
    inv = invariants(spec)
    elems = list(enumerate_group(spec))
    assert len(elems) == len(set(elems)) == group_order(spec) == math.prod(inv.degrees)
    assert len(reflections(spec)) == inv.num_reflections == sum(d - 1 for d in inv.degrees)
    assert sum(inv.coexponents) == inv.num_hyperplanes


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_coxeter_element_has_order_h(spec):
    c = coxeter_element(spec)
    h = invariants(spec).h
    g, order = c, 1
    while not g.is_identity():
        g, order = g * c, order + 1
    assert order == h


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_shephard_todd(spec):
    # sum over the group of t^fixdim factors as prod (t + d_i - 1)
    dist = fixdim_distribution(spec)
    if spec.family == "sym":
        # cycles count includes the fixed all-ones line
        dist = {f - 1: c for f, c in dist.items()}
    degrees = invariants(spec).degrees
    for t in range(-3, 4):
        assert sum(c * t**f for f, c in dist.items()) == math.prod(t + d - 1 for d in degrees)


def test_ddn_membership():
    spec = GroupSpec.ddn(3, 3)
    assert all(sum(u.weights) % 3 == 0 for u in enumerate_group(spec))
