"""
The four measures and the one-variable matrix algebra
=====================================================

The group of order-preserving bijections of the line carries exactly four
field-valued measures.  Composition of invariant matrices integrates over the
middle tuple, so the same two matrices multiply differently under each
measure.
"""

from delannoy.fields import QQ
from delannoy.schwartz import (MEASURES, MU1, MU2, BOUNDED, FULL_LINE,
                               UNBOUNDED_ABOVE, UNBOUNDED_BELOW, PermMatrix,
                               compose, gap_measure, identity, trace,
                               transpose)

# The measures are pinned down by their values on powers of open intervals.
print("interval powers I^(k), k = 0..3:")
for kind in (BOUNDED, UNBOUNDED_ABOVE, UNBOUNDED_BELOW, FULL_LINE):
    rows = {mu: [gap_measure(mu, kind, k) for k in range(4)]
            for mu in MEASURES}
    print(f"  {kind:>8}: " + "   ".join(f"mu{m}={v}" for m, v in rows.items()))

# The indicator of {y <= x} and its reflection.
A = PermMatrix((1,), (1,), {(0, 0, "UR"): QQ.one, (0, 0, "D"): QQ.one})
B = transpose(A)
one = identity((1,))

print("\nproducts of the two half-line projectors:")
for mu in MEASURES:
    ab = compose(A, B, mu)
    if ab.is_zero():
        desc = "0"
    elif ab == A + B - one:
        desc = "A + B - 1"
    else:
        desc = "?"
    print(f"  mu{mu}:  A^2 = A: {compose(A, A, mu) == A},   A B = {desc}")

# Categorical dimensions are measures of the underlying sets: the line has
# dimension -1 under the first measure and 0 under the second.
print("\ntraces of the identity on one coordinate:")
for mu in MEASURES:
    print(f"  mu{mu}: {trace(one, mu)}")
