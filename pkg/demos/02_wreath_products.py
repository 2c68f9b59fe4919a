"""Generalized permutations and the groups G(d,1,n) and G(d,d,n)."""
from refacto import closed_forms as cf
from refacto import oracle as orc
from refacto.wreath import GenPerm, GroupSpec, coxeter_element, group_order, invariants

# [pi; a] is a permutation with a d-th root of unity weight on each point.
u = GenPerm.parse("(1532)(4)", (1, 2, 2, 0, 1), 3)
v = GenPerm.parse("(134)(25)", (1, 2, 0, 2, 2), 3)
print(u, "*", v, "=", u * v)

# Fixed-space dimension is the number of cycles of weight 0.
print("fixdim:", u.fixdim(), v.fixdim(), (u * v).fixdim())

spec = GroupSpec.d1n(3, 3)
inv = invariants(spec)
print(spec, "order", group_order(spec), "degrees", inv.degrees, "coexponents", inv.coexponents, "h", inv.h)
print("Coxeter element:", coxeter_element(spec))

f = cf.gd1n_poly(3, 3, 2)
print(f.format(["x1", "x2"]))
print("oracle agrees:", f == orc.count_by_fixdim(spec, 2))

# In G(d,d,n) the count splits by whether the factors act transitively on points.
d, n = 3, 3
trans = cf.gddn_transitive_poly(d, n, 2)
non = cf.gddn_nontransitive_poly(d, n, 2)
print("transitive:   ", trans.format(["x1", "x2"]))
print("nontransitive:", non.format(["x1", "x2"]))
spec = GroupSpec.ddn(d, n)
print("sum agrees with oracle:", trans + non == orc.count_by_fixdim(spec, 2))

# Parallel enumeration gives the same tally.
q = orc.FactorQuery(spec, 3, workers=2)
print("k=3 parallel equals closed form:", orc.count(q) == cf.gddn_poly(d, n, 3))
