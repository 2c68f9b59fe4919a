import math

import pytest
from hypothesis import given, strategies as st

from refacto.perm_core import (
    Permutation,
    cycle_type,
    enumerate_sn,
    is_transitive,
    long_cycle,
    orbits,
    transposition,
)


@st.composite
def perms(draw, n=6):
    return Permutation(draw(st.permutations(range(n))))


def test_parse_and_print():
    p = Permutation.parse("(1532)(4)", 5)
    assert p(0) == 4 and p(4) == 2 and p(2) == 1 and p(1) == 0 and p(3) == 3
    assert str(p) == "(1532)(4)"
    assert Permutation.parse("(12345)", 5) == long_cycle(5)
    assert Permutation.parse("21345", 5) == transposition(0, 1, 5)  # one-line notation
    assert str(Permutation.identity(3)) == "(1)(2)(3)"


def test_product_applies_right_factor_first():
    a, b = transposition(0, 1, 3), transposition(1, 2, 3)
    assert (a * b)(1) == a(b(1)) == 2


@given(perms(), perms(), perms())
def test_group_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * p.inverse() == Permutation.identity(6)
    assert (p * q).sign() == p.sign() * q.sign()


@given(perms())
def test_cycle_type_partitions_n(p):
    ct = cycle_type(p)
    assert sum(ct) == 6
    assert list(ct) == sorted(ct, reverse=True)
    assert p.num_cycles() == len(ct)
    assert p.sign() == (-1) ** (6 - len(ct))


def test_enumerate_sn():
    elems = list(enumerate_sn(4))
    assert len(elems) == math.factorial(4) == len(set(elems))
    assert elems == sorted(elems)


def test_orbits_and_transitivity():
    a, b = transposition(0, 1, 4), transposition(2, 3, 4)
    assert sorted(map(sorted, orbits([a, b], 4))) == [[0, 1], [2, 3]]
    assert not is_transitive([a, b], 4)
    assert is_transitive([a, b, transposition(1, 2, 4)], 4)


def test_bad_input():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
