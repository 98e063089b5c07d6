"""Quadratic fields by fundamental discriminant: counts and local densities."""

import numpy as np

from ramlab import FamilySpec, density
from ramlab.quadfields import (count_fundamental, enumerate_fundamental_discriminants,
                               fundamental_batches, quadratic_divisibility_ratio)

print("smallest quadratic fields (disc, omega):")
for rec in list(enumerate_fundamental_discriminants(40))[:16]:
    print(f"  {rec.discriminant:>4}  omega={rec.omega}")

X = 10**6
n = count_fundamental(X)
print(f"\ncount(|D| <= {X}) = {n}; count/X = {n / X:.6f}  (6/pi^2 = {6 / np.pi**2:.6f})")

spec = FamilySpec.for_degree(2)
print("\nempirical divisibility vs rho_2(q):")
for q in (2, 3, 5, 7, 6, 30):
    ratio = quadratic_divisibility_ratio(X, q)
    rho = float(density(spec, q))
    print(f"  q={q:>2}: ratio {ratio:.6f}   rho {rho:.6f}   diff {ratio - rho:+.6f}")

# sign split: positive vs negative discriminants
pos = neg = 0
for disc, _ in fundamental_batches(X):
    pos += int(np.count_nonzero(disc > 0))
    neg += int(np.count_nonzero(disc < 0))
print(f"\npositive {pos} vs negative {neg} (ratio {pos / neg:.4f})")
