"""
Cut idempotents, hom spaces, and Krull-Schmidt decompositions
=============================================================

Each weight cuts an indecomposable summand out of a Schwartz space via an
explicit order-indicator idempotent.  Hom dimensions come from the trace of
the double-cut operator, and decompositions from inverting the hom pattern.
"""

from delannoy.acat import (degenerate_quotient_dim, e_lambda, hom_dim,
                           indecomposable, multiplicities, schwartz_object,
                           theta_mult)
from delannoy.schwartz import MU1, MU2, compose, trace
from delannoy.weights import enumerate_weights, format_weight

e = e_lambda("bw")
print("the idempotent at bw is supported on paths:",
      sorted(k[2] for k in e.entries))
print("idempotent under both measures:",
      compose(e, e, MU1) == e and compose(e, e, MU2) == e)

print("\nhom dimensions between indecomposables (rows -> columns):")
ws = enumerate_weights(2)
header = "      " + " ".join(f"{format_weight(w):>3}" for w in ws)
print(header)
for a in ws:
    row = [hom_dim(indecomposable(a), indecomposable(b)) for b in ws]
    print(f"  {format_weight(a):>3}: " + " ".join(f"{d:>3}" for d in row))

print("\ndecomposition of the Schwartz spaces (binomial multiplicities):")
for n in (1, 2, 3):
    mult = multiplicities(schwartz_object(n))
    print(f"  n={n}: " + ", ".join(f"{format_weight(k)}:{v}"
                                   for k, v in sorted(mult.items())))

print("\nmultiplicity of the unit (semisimplification):",
      theta_mult(schwartz_object(2)), "for n=2,",
      theta_mult(indecomposable("")), "for the unit itself")

print("\ndegenerate quotient dimensions (should be 2^n):",
      [degenerate_quotient_dim(n) for n in (1, 2, 3)])

print("\ntraces pick out categorical dimensions:",
      [str(trace(e_lambda(l), MU1)) for l in ("", "b", "bw")])
