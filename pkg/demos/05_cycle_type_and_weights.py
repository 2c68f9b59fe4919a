"""Finer statistics in G(d,1,n): weight-0 cycle types and all cycle weights."""
from refacto import closed_forms as cf
from refacto import oracle as orc
from refacto.verify import cycle_type_lhs
from refacto.wreath import GroupSpec

d, n, k = 2, 2, 2
q = orc.FactorQuery(GroupSpec.d1n(d, n), k)

# Weight-0 cycle types of the two factors
for types, c in orc.count_by_weight0_type(q).items():
    print(types, c)

# The closed form is a polynomial in symmetric functions of y_1..y_n per factor
rhs = cf.cycle_type_rhs(d, n, k, n)
print("closed form equals oracle:", rhs == cycle_type_lhs(d, n, k, n))

# Genus 0 counts need only the partitions themselves, not d
print(cf.genus0_cycle_type(2, [(2, 1), (1,)], 3), cf.genus0_cycle_type(3, [(2, 1), (1,)], 3))

# Count cycles of each weight j in each factor: variable i*d + j
w = cf.all_weights_poly(d, n, k)
print(w.format(["a0", "a1", "b0", "b1"]))
print("oracle:", w == orc.weight_distribution_poly(q))

# Extract the t^0 term instead of t^1 and the match is lost
print("residue 0 matches:", cf.all_weights_poly(d, n, k, residue=0) == orc.weight_distribution_poly(q))
