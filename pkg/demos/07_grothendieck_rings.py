"""
Grothendieck rings and the comparison isomorphisms
==================================================

All four rings are free on the weights.  The split ring of the additive
category multiplies by restricted ruffles, the semisimple ring by all
ruffles; the comparison maps are unitriangular and the triple of derived
Euler characteristics decomposes the module category's ring.
"""

from delannoy.bmod import named_bmodule
from delannoy.kring import (KA, KC, KD, basis_element, i_map, j_map,
                            kb_decompose, mult, phi_map, tilting_class)

mb, mw = basis_element(KA, "b"), basis_element(KA, "w")
print("products in the two rings:")
print("  [M_b][M_w] =", mult(mb, mw))
print("  [L_b][L_w] =", mult(basis_element(KC, "b"), basis_element(KC, "w")))

print("\nthe comparison maps on a generator:")
print("  phi[M_b] =", phi_map(mb))
print("  i[M_b]   =", i_map(mb))
print("  j[T_b]   =", j_map(tilting_class("b")))

print("\nphi is multiplicative:")
lhs = phi_map(mult(mb, mw))
rhs = mult(phi_map(mb), phi_map(mw))
print("  phi([M_b][M_w]) == phi[M_b] phi[M_w]:", lhs == rhs)

print("\nthe triple decomposition on the three generator families:")
for kind, lam in [("Q", "b"), ("I", "b"), ("S", "")]:
    chi_c, chi_d, chi_v = kb_decompose(named_bmodule(kind, lam))
    print(f"  [{kind}_{lam or 'e'}] -> ({chi_c}, {chi_d}, {chi_v})")
