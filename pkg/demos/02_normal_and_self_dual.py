"""
Normal and self-dual bases
==========================

Normal bases are Frobenius orbits.  Self-dual bases have an identity trace
Gram matrix.  We search for both and look at the shape of their
automorphism matrices.
"""

# %%
from galring import GaloisRing, automorphism_matrix, basis_report, normal_closure
from galring import search_normal_bases, search_self_dual_bases

R = GaloisRing(2, 2, 2)
gens = search_normal_bases(R)
print(len(gens), "normal-basis generators in", R.spec())
b = normal_closure(R.omega)
print("orbit of w:", b)
print("B symmetric:", automorphism_matrix(b).is_symmetric(), " orthogonal:", automorphism_matrix(b).is_orthogonal())

# %%
# GR(4, 2) has no self-dual basis at all, but GR(4, 3) does, and one of them
# is also a normal basis.
print("self-dual in GR(4,2):", search_self_dual_bases(R))
R3 = GaloisRing(2, 2, 3)
sd = normal_closure(R3([1, 1]))
rep = basis_report(sd)
print(sd, "self-dual:", rep.is_self_dual, "normal:", rep.is_normal)
print("B B^t =", automorphism_matrix(sd) @ automorphism_matrix(sd).T)

# %%
found = search_self_dual_bases(R3, limit=5)
for basis in found:
    print("  ", basis)
