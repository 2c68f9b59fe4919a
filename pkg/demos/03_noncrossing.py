"""Noncrossing intervals below a Coxeter element and genus-0 factorizations."""
from refacto import closed_forms as cf
from refacto import noncross as nc
from refacto.wreath import GenPerm, GroupSpec

spec = GroupSpec.d1n(2, 3)
iv = nc.interval(spec)
print(spec, "interval size", len(iv), "Catalan number", nc.catalan_number(spec))
print("rank sizes:", iv.rank_sizes())

# Chains 1 <= g_1 <= ... <= c with prescribed rank jumps
for s in [(1, 2), (2, 1), (1, 1, 1)]:
    print(s, nc.chains_by_rank_jumps(spec, len(s), s, iv), cf.genus0_gd1n(2, 3, s))

# Summing over all jump vectors gives the zeta polynomial
for k in (2, 3, 4):
    print("zeta at", k, ":", nc.zeta_by_chains(spec, k), cf.zeta(spec, k))

# Codimension order and reflection-length order agree on [1, c] here
a = nc.interval(GroupSpec.ddn(3, 3), order="codim")
b = nc.interval(GroupSpec.ddn(3, 3), order="refl")
print("G(3,3,3) intervals equal:", a.rank == b.rank)

# but not on every interval: below this w in G(7,7,6) they differ
g = GroupSpec.ddn(7, 6)
w = GenPerm.parse("123456", (1, 2, 3, 4, 5, 6), 7)
u = GenPerm.parse("123456", (1, 2, 0, 4, 0, 0), 7)
v = GenPerm.parse("123456", (0, 0, 3, 0, 5, 6), 7)
print("u v = w:", u * v == w)
print("codim u, v, w:", nc.codim(g, u), nc.codim(g, v), nc.codim(g, w))
print("reflection length u, v:", nc.reflection_length(g, u), nc.reflection_length(g, v))
