"""Factorizations of a Coxeter element into reflections."""
import math

from refacto import closed_forms as cf
from refacto import oracle as orc
from refacto.wreath import GroupSpec, invariants

for spec in [GroupSpec.d1n(2, 3), GroupSpec.ddn(3, 3), GroupSpec.sym(4)]:
    counts = cf.chapuy_stump_counts(spec, 7)
    print(spec, counts)
    print("  dynamic programming:", counts == orc.reflection_dp_counts(spec, 7))
    inv = invariants(spec)
    r = spec.rank
    print("  minimal length", r, ":", counts[r], "= r! h^r / |W| =", math.factorial(r) * inv.h**r // inv.order)
