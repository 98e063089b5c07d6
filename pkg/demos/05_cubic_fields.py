"""Cubic fields via reduced binary cubic forms and the local maximality test."""

import numpy as np

from ramlab import FamilySpec, density, enumerate_cubic_fields, form_discriminant
from ramlab.cubicfields import cubic_field_batches, cubic_omega_histogram

print("smallest cubic fields:")
for rec in list(enumerate_cubic_fields(150)):
    kind = "cyclic" if rec.is_cyclic else "S3"
    print(f"  disc {rec.discriminant:>5}  omega={rec.omega}  {kind}")

X = 10**6
h = cubic_omega_histogram(X, workers=2)
print(f"\nomega(D_K) histogram, |D_K| <= {X} ({h.total} fields):")
for w, c in h.as_sorted_items():
    print(f"  {w}: {c:>7}  {'#' * int(60 * c / max(h.bins.values()))}")

spec = FamilySpec.for_degree(3)
print("\nempirical divisibility vs rho_3(q):")
hits = {q: 0 for q in (2, 3, 5, 7, 6, 30)}
total = 0
for disc, _, cy in cubic_field_batches(X, workers=2):
    total += len(disc)
    for q in hits:
        hits[q] += int(np.count_nonzero(disc % q == 0))
for q, hit in hits.items():
    rho = float(density(spec, q))
    print(f"  q={q:>2}: ratio {hit / total:.6f}   rho {rho:.6f}   diff {hit / total - rho:+.6f}")

cyc = sum(len(d[d > 0][np.rint(np.sqrt(d[d > 0])).astype(np.int64) ** 2 == d[d > 0]])
          for d, _, _ in cubic_field_batches(X))
print(f"\ncyclic fields up to {X}: {cyc} (square discriminants)")
