"""Factorizations of the long cycle in S_n, counted three ways."""
from refacto import closed_forms as cf
from refacto import characters as ch
from refacto import oracle as orc
from refacto.wreath import GroupSpec

# The long cycle (1 2 ... n) written as a product of k permutations.
# Variable x_i marks the number of cycles of the i-th factor.
n, k = 4, 2
f = cf.jackson_poly(n, k)
print(f.format(["x1", "x2"]))

# Brute force: run over the first k - 1 factors, the last one is forced.
g = orc.count_by_fixdim(GroupSpec.sym(n), k)
print("oracle agrees:", f == g)

# Third route: the Frobenius formula over irreducible characters.
print("characters agree:", ch.frobenius_fixdim_poly(n, (n,), k) == f)

# Setting every x_i = 1 counts all factorizations, |S_n|^(k-1) of them.
print("total:", f.evaluate([1, 1]), "= 4! =", 24)

# With three factors the polynomial is symmetric in x1, x2, x3.
f3 = cf.jackson_poly(4, 3)
print("terms with k=3:", len(f3))
print("x1 x2 x3 coefficient:", f3.coeff((1, 1, 1)))

# Transitive factorizations of an (n-1)-cycle have their own closed form.
t = cf.n1cycle_transitive_poly(5, 2)
print(t.format(["x1", "x2"]))
q = orc.count_by_fixdim(GroupSpec.sym(5), 2, target=orc.n1_cycle(5), transitivity="transitive")
print("oracle agrees:", t == q)
