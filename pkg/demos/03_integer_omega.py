"""omega(n) across 2..X: the integer side of the comparison.

The segmented sieve counts distinct prime factors for every n at once; the
histogram concentrates around log log X with matching variance.
"""

import math

from ramlab import loglog_mean, omega_histogram
from ramlab.stats import central_moment

X = 10**6
h = omega_histogram(X, workers=2)
print(f"omega(n) histogram for 2 <= n <= {X}:")
for w, c in h.as_sorted_items():
    print(f"  {w}: {c:>9}  {'#' * int(60 * c / h.total)}")

mu = loglog_mean(X)
mean = h.mean()
var = math.fsum(c * (w - mean) ** 2 for w, c in h.bins.items()) / h.total
print(f"\nmean     {mean:.4f}   loglog X = {mu:.4f}")
print(f"variance {var:.4f}   second moment about loglog X: {central_moment(h, 2, X):.4f}")
