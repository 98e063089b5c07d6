"""The Erdos-Kac picture: standardized ramified-prime counts vs the Gaussian.

Puts the three distributions side by side at desk scale: omega(n) over the
integers, omega(D_K) over cubic fields, and the Bernoulli model, each
standardized by mean and variance log log X.
"""

import math

import numpy as np

from ramlab import (BernoulliFamily, FamilySpec, exact_distribution,
                    loglog_mean, omega_histogram)
from ramlab.cubicfields import cubic_omega_histogram
from ramlab.intsieve import Histogram
from ramlab.stats import StandardizedSample, ecdf_points, ks_distance

X = 10**6
mu = loglog_mean(X)
print(f"X = {X}, loglog X = {mu:.4f}\n")

ints = omega_histogram(X, workers=2)
cubi = cubic_omega_histogram(X, workers=2)
fam = BernoulliFamily.create(FamilySpec.for_degree(3), X)
dist = exact_distribution(fam, cap=30)
model = Histogram({k: round(1e9 * float(m)) for k, m in enumerate(dist.mass) if m > 0},
                  total=int(sum(round(1e9 * float(m)) for m in dist.mass if m > 0)))

print(f"{'omega':>6} {'integers':>10} {'cubic fields':>13} {'model':>10}")
for w in range(1, 9):
    print(f"{w:>6} {ints.bins.get(w, 0) / ints.total:>10.4f} "
          f"{cubi.bins.get(w, 0) / cubi.total:>13.4f} "
          f"{model.bins.get(w, 0) / model.total:>10.4f}")

for label, h in (("integers", ints), ("cubic fields", cubi), ("model", model)):
    s = StandardizedSample(X=float(X), values=h)
    print(f"\n{label}: KS distance to the standard normal = {ks_distance(s):.4f}")
    pts = ecdf_points(s)
    row = "  ".join(f"({z:+.2f}: {f:.3f}|{phi:.3f})" for z, f, phi in pts[1:6])
    print(f"  (z: ecdf|Phi) {row}")
