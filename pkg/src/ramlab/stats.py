"""Statistics over enumerated fields: moments, truncation, KS distance.

All field-side statistics fold over record streams (or raw discriminant
array batches); nothing holds the full record list in memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .densities import FamilySpec, density, loglog_mean
from .intsieve import Histogram
from .model import BernoulliFamily, MomentReport, exact_moments, recentered_moments
from .primes import primes_up_to
from .quadfields import FieldRecord

_BATCH = 1 << 16


def disc_batches(records) -> Iterator[np.ndarray]:
    """Adapt FieldRecord streams or ndarray batches to int64 discriminant arrays."""
    buf = []
    for item in records:
        if isinstance(item, FieldRecord):
            buf.append(item.discriminant)
            if len(buf) >= _BATCH:
                yield np.array(buf, dtype=np.int64)
                buf = []
        elif isinstance(item, np.ndarray):
            yield item.astype(np.int64)
        else:  # (disc, omega, cyclic) tuple of arrays
            yield np.asarray(item[0], dtype=np.int64)
    if buf:
        yield np.array(buf, dtype=np.int64)


@dataclass
class StandardizedSample:
    """An omega histogram with the (omega - loglog X) / sqrt(loglog X) transform."""

    X: float
    values: Histogram
    mu: float = field(init=False)

    def __post_init__(self):
        self.mu = loglog_mean(self.X)

    def z_transform(self, omega: float) -> float:
        return (omega - self.mu) / math.sqrt(self.mu)


def central_moment(h: Histogram, k: int, X: float) -> float:
    """(1/N) sum over bins of count * (omega - loglog X)^k."""
    if h.total <= 0:
        raise ValueError("empty histogram")
    mu = loglog_mean(X)
    return math.fsum(cnt * (w - mu) ** k for w, cnt in h.bins.items()) / h.total


def raw_truncated_moment(h: Histogram, k: int) -> float:
    """(1/N) sum of omega^k over a (truncated) omega histogram."""
    if h.total <= 0:
        raise ValueError("empty histogram")
    return math.fsum(cnt * w**k for w, cnt in h.bins.items()) / h.total


def truncated_omega(records, Z: int) -> Histogram:
    """Histogram of omega(K; Z) = #{p <= Z : p | D_K} over the records."""
    if Z < 1:
        raise ValueError(f"Z must be >= 1, got {Z}")
    primes = primes_up_to(Z)
    counts = np.zeros(len(primes) + 1, dtype=np.int64)
    for disc in disc_batches(records):
        small = np.zeros(len(disc), dtype=np.int64)
        for p in primes:
            small += disc % p == 0
        bc = np.bincount(small)
        counts[: len(bc)] += bc
    return Histogram.from_counts(counts, label=f"omega(K; Z={Z})")


def truncated_raw_moment(records, Z: int, k: int, against_model: BernoulliFamily,
                         degree: int | None = None) -> tuple[float, float]:
    """((1/N) sum omega(K;Z)^k, exact model moment E(R(Z)^k)) for comparison."""
    if against_model.cutoff_Z != Z:
        raise ValueError(
            f"model cutoff {against_model.cutoff_Z} does not match Z = {Z}")
    if degree is not None and against_model.spec.degree != degree:
        raise ValueError(
            f"model degree {against_model.spec.degree} does not match records degree {degree}")
    h = truncated_omega(records, Z)
    left = raw_truncated_moment(h, k)
    right = 1.0 if k == 0 else exact_moments(against_model, max(k, 1)).raw[k - 1]
    return left, right


def normal_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def ecdf_points(sample: StandardizedSample) -> list[tuple[float, float, float]]:
    """(z, ECDF, Phi) at half-integer omega offsets, the fixed CDF convention."""
    if sample.values.total <= 0:
        raise ValueError("empty sample")
    items = sample.values.as_sorted_items()
    total = sample.values.total
    out = []
    running = 0
    lead = sample.z_transform(items[0][0] - 0.5)
    out.append((lead, 0.0, normal_cdf(lead)))
    for w, cnt in items:
        running += cnt
        z = sample.z_transform(w + 0.5)
        out.append((z, running / total, normal_cdf(z)))
    return out

def ks_distance(sample: StandardizedSample) -> float:
    """Exact sup of |ECDF - Phi| for the standardized omega.

    The ECDF jumps at half-integer omega offsets; the sup is attained on one
    side of some jump, so both sides of every edge are compared.
    """
    pts = ecdf_points(sample)
    best = 0.0
    prev_f = 0.0
    for _, f, phi in pts:
        best = max(best, abs(phi - prev_f), abs(f - phi))
        prev_f = f
    return best


def divisibility_count(records, q: int) -> int:
    """Number of records whose discriminant is divisible by squarefree q."""
    from .densities import factor_squarefree

    factor_squarefree(q)
    return sum(int(np.count_nonzero(disc % q == 0)) for disc in disc_batches(records))


def divisibility_table(records, spec: FamilySpec, qs: Iterable[int]) -> dict[int, dict]:
    """Empirical ratio vs exact density rho_d(q) for each q, over one record pass."""
    qs = list(qs)
    hits = {q: 0 for q in qs}
    total = 0
    for disc in disc_batches(records):
        total += len(disc)
        for q in qs:
            hits[q] += int(np.count_nonzero(disc % q == 0))
    out = {}
    for q in qs:
        ratio = hits[q] / total if total else float("nan")
        rho = float(density(spec, q))
        out[q] = {"count": hits[q], "ratio": ratio, "rho": rho, "difference": ratio - rho}
    return out


def field_moment_report(h: Histogram, X: float, Z: int | None, k_max: int) -> MomentReport:
    """MomentReport (source "fields") from an omega histogram at bound X."""
    raw = [raw_truncated_moment(h, k) for k in range(1, k_max + 1)]
    mean = raw[0]
    central = [math.fsum(cnt * (w - mean) ** k for w, cnt in h.bins.items()) / h.total
               for k in range(1, k_max + 1)]
    mu = loglog_mean(X)
    about_mu = recentered_moments(central, mean=mean, center=mu)
    standardized = [about_mu[k - 1] / mu ** (k / 2.0) for k in range(1, k_max + 1)]
    return MomentReport(source="fields", X=float(X), Z=Z if Z is not None else 0,
                        raw=raw, central=central, standardized=standardized)


def empirical_field_density(count: int, X: float) -> float:
    """N_d(X)/X: an empirical stand-in for the field-count constant (estimate only)."""
    return count / X
