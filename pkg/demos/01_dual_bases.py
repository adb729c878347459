"""
Dual bases in small Galois rings
================================

A walk through GR(4, 2) and GR(4, 3): build the ring, look at the
automorphism matrix of the polynomial basis, invert it, and read off the
trace-dual basis.
"""

# %%
# GR(4, 2) is Z_4[x] modulo the lift of x^2 + x + 1.  With no modulus given,
# the library picks the smallest primitive polynomial over F_2 and lifts it.
from galring import GaloisRing, automorphism_matrix, dual_basis, is_dual_pair, polynomial_basis

R = GaloisRing(2, 2, 2)
print(R.spec(), "order", R.order, "units", R.unit_group_order)
w = R.omega
print("w^2 =", w * w)

# %%
# Row i of B holds the conjugates of beta_i.  Its determinant is a unit even
# though Z_4 has zero divisors.
b = polynomial_basis(R)
B = automorphism_matrix(b)
print("B =", B)
print("det B =", B.det(), " (det B)^2 =", B.det() ** 2)

# %%
# Row 0 of B^-1 is the dual basis.  The pairing T(beta_i delta_j) confirms it.
print("B^-1 =", B.inverse())
d = dual_basis(b)
print("dual:", d, " check:", is_dual_pair(b, d))

# %%
# The same recipe in degree three.
R3 = GaloisRing(2, 2, 3)
b3 = polynomial_basis(R3)
print(R3.spec())
print("det B =", automorphism_matrix(b3).det())
print("dual:", dual_basis(b3))
for beta in b3:
    print("  ", beta, [R3.trace(beta * delta) for delta in dual_basis(b3)])
