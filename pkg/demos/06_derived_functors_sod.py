"""
The three derived functors and the semi-orthogonal decomposition
================================================================

The three right-exact functors out of the module category (to the semisimple
category, to the tilting-side abelian category, and to vector spaces) are
left-derived along minimal resolutions.  Their kernels and values realize the
three pieces of the derived category.
"""

from delannoy.bmod import named_bmodule
from delannoy.derived import l_phi, l_psi, l_theta
from delannoy.weights import format_weight


def show(name, value):
    print(f"  {name:<12} {value}")


print("first derived functor (values are simple multiplicities by degree):")
show("S_w:", l_phi(named_bmodule("S", "w"), 4))
show("S_wbb:", l_phi(named_bmodule("S", "wbb"), 4))
show("Q_wb:", l_phi(named_bmodule("Q", "wb"), 4))
show("Cost_b:", l_phi(named_bmodule("Cost", "b"), 4))

print("\nsecond derived functor (named identifications; amplitude <= 1):")
show("S_w:", l_psi(named_bmodule("S", "w"), 3))
show("S_b:", l_psi(named_bmodule("S", "b"), 3))
show("Stan_w:", l_psi(named_bmodule("Stan", "w"), 3))
show("I_w:", l_psi(named_bmodule("I", "w"), 3))
show("Q_b:", l_psi(named_bmodule("Q", "b"), 3))

print("\nthird derived functor (vector space dims by degree):")
show("S_bb:", l_theta(named_bmodule("S", "bb"), 4))
show("S_e:", l_theta(named_bmodule("S", ""), 4))
show("I_b:", l_theta(named_bmodule("I", "b"), 4))

print("\nthe three generators of the pieces are separated by the functors:")
for kind, lam in [("Q", "b"), ("I", "b"), ("S", "")]:
    m = named_bmodule(kind, lam)
    hit = (bool(l_phi(m, 4)), bool(l_psi(m, 3)),
           any(l_theta(m, 4)))
    name = f"{kind}_{format_weight(lam)}"
    print(f"  {name:<5} -> seen by (first, second, third) = {hit}")
