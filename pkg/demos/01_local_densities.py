"""Exact local ramification densities and their multiplicative structure.

For each degree d the probability that a random degree-d field ramifies at p
is an explicit rational rho_d(p) ~ 1/p.  Everything below is exact Fraction
arithmetic.
"""

from fractions import Fraction

from ramlab import FamilySpec, density, gaussian_moment, local_density
from ramlab.primes import primes_up_to

print("rho_d(p) for small primes")
print(f"{'p':>4} " + "".join(f"{'d='+str(d):>12}" for d in (2, 3, 4, 5)))
for p in (2, 3, 5, 7, 11, 13):
    row = [local_density(FamilySpec.for_degree(d), p) for d in (2, 3, 4, 5)]
    print(f"{p:>4} " + "".join(f"{str(r):>12}" for r in row))

print("\np * rho_d(p) -> 1:")
for p in (11, 101, 1009, 10007):
    r = local_density(FamilySpec.for_degree(3), p)
    print(f"  p={p:>6}: p*rho = {float(p * r):.6f}")

s3 = FamilySpec.for_degree(3)
print("\nmultiplicativity: rho(6) = rho(2) * rho(3):",
      density(s3, 6) == local_density(s3, 2) * local_density(s3, 3))
print("rho_3(30) =", density(s3, 30))

print("\nGaussian moments c_k:", [gaussian_moment(k) for k in range(11)])

# expected count of ramified primes below Z, compared with log log Z
import math

from ramlab import BernoulliFamily

for Z in (10**3, 10**5, 10**7):
    fam = BernoulliFamily.create(s3, Z)
    mean = float(fam.rho_floats().sum())
    print(f"Z={Z:>9}: sum rho_3(p) = {mean:.4f}   loglog Z = {math.log(math.log(Z)):.4f}")
