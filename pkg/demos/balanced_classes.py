"""Why the integer classes are finer than the rational ones.

Over Q[t, t^-1] two polynomials are equivalent when one is r*t^n times
the other, so all of c*(t - 1) collapse to a single class.  Over
Z[t, t^-1] only the units +-t^n are allowed and the content survives:
the four 1x1 pairs below give four distinct integer classes with one
common rational class.
"""
from alexpoly import (
    Ring,
    SeifertPair,
    canonicalize,
    q_alexander,
    q_balanced_eq,
    z_alexander,
    z_balanced_eq,
)

pairs = {s: SeifertPair([[s]], [[s]], p=1, n=2) for s in (4, 3, 2, 1)}

print("pair   Z class       Q class")
for s, pair in pairs.items():
    z = z_alexander(pair).representative
    q = q_alexander(pair).representative
    print(f"({s})    {str(z):12}  {q}")

f4 = z_alexander(pairs[4]).representative
f3 = z_alexander(pairs[3]).representative
print(f"\nZ-balanced({f4}, {f3}): {z_balanced_eq(f4, f3)}")
print(f"Q-balanced({f4}, {f3}): {q_balanced_eq(f4, f3)}")

# Canonical forms decide equivalence by plain equality.
g = -(f4.shift(6))  # -t^3 * (4t - 4), same Z class as 4t - 4
print(f"\ncanonicalize({g}, Z) = {canonicalize(g, Ring.Z)}")
print(f"canonicalize({g}, Q) = {canonicalize(g, Ring.Q)}")
