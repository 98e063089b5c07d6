"""Independent-Bernoulli model of ramification: one indicator per prime p <= Z.

The sum R(Z) of the indicators has an exact Poisson-binomial law.  Two
independent computations of its moments are maintained deliberately:

* sequential convolution of the mass vector (quadratic in pi(Z), capped),
* cumulant accumulation (linear in pi(Z), works up to Z = 10^8),

each serving as the oracle for the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool

import numpy as np

from .densities import FamilySpec, local_density, loglog_mean
from .intsieve import Histogram
from .primes import primes_up_to

_LOCAL_SERIES = {
    2: (1.0, 1.0),
    3: (1.0, 1.0, 1.0),
    4: (1.0, 1.0, 2.0, 1.0),
    5: (1.0, 1.0, 2.0, 2.0, 1.0),
}

MAX_K = 12
_SAMPLE_BLOCK = 4096
_PRIME_CHUNK = 1024


@dataclass
class BernoulliFamily:
    """Bernoulli indicators R_p for every prime p <= Z, P(R_p = 1) = rho_d(p)."""

    spec: FamilySpec
    cutoff_Z: int
    primes: np.ndarray = field(repr=False)

    @classmethod
    def create(cls, spec: FamilySpec, Z: int) -> "BernoulliFamily":
        if Z < 2:
            raise ValueError(f"cutoff Z must be >= 2, got {Z}")
        return cls(spec=spec, cutoff_Z=Z, primes=primes_up_to(Z))

    @property
    def probabilities(self) -> list[tuple[int, Fraction]]:
        """Exact (p, rho_d(p)) pairs; intended for desk-scale Z."""
        return [(int(p), local_density(self.spec, int(p))) for p in self.primes]

    def rho_floats(self, dtype=np.float64) -> np.ndarray:
        """rho_d(p) for all primes p <= Z, evaluated in floating point."""
        inv = 1.0 / self.primes.astype(dtype)
        series = np.zeros_like(inv)
        for coeff in reversed(_LOCAL_SERIES[self.spec.degree]):
            series = series * inv + dtype(coeff)
        return 1.0 - 1.0 / series


@dataclass
class ModelDistribution:
    """Poisson-binomial mass over counts 0..cap plus the spilled tail mass."""

    cap: int
    mass: np.ndarray
    tail_mass: float

    def mass_defect(self) -> float:
        """| sum(mass) + tail_mass - 1 |; the convolution keeps this below 1e-12."""
        return abs(float(np.sum(self.mass, dtype=np.longdouble)) + self.tail_mass - 1.0)

    def to_json_dict(self) -> dict:
        return {"mass": [float(m) for m in self.mass], "tail_mass": float(self.tail_mass)}

    def moment(self, k: int, center: float = 0.0) -> float:
        values = np.arange(self.cap + 1, dtype=np.longdouble) - np.longdouble(center)
        return float(np.sum(self.mass * values**k))


@dataclass
class MomentReport:
    """Raw/central/standardized moments for k = 1..k_max (lists are 0-indexed by k-1)."""

    source: str
    X: float | None
    Z: int
    raw: list[float]
    central: list[float]
    standardized: list[float] | None = None

    @property
    def k_max(self) -> int:
        return len(self.raw)

    def to_json_dict(self) -> dict:
        return {
            "source": self.source,
            "X": self.X,
            "Z": self.Z,
            "k": self.k_max,
            "raw": self.raw,
            "central": self.central,
            "standardized": self.standardized,
        }


def exact_distribution(fam: BernoulliFamily, cap: int = 64) -> ModelDistribution:
    """Exact law of R(Z) by sequential convolution, with tracked tail mass.

    Runs in extended precision so that sum(mass) + tail_mass stays within
    1e-12 of 1 even over millions of convolution steps.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    rho = fam.rho_floats(np.longdouble)
    mass = np.zeros(cap + 1, dtype=np.longdouble)
    mass[0] = 1.0
    new = np.empty_like(mass)
    tail = np.longdouble(0.0)
    for q in rho:
        tail += mass[cap] * q
        np.multiply(mass, 1.0 - q, out=new)
        new[1:] += mass[:-1] * q
        mass, new = new, mass
    return ModelDistribution(cap=cap, mass=mass.copy(), tail_mass=float(tail))


def _bernoulli_cumulants(q: np.ndarray, k_max: int) -> list[np.longdouble]:
    """Summed cumulants kappa_1..kappa_k of the independent Bernoulli(q_i).

    Every raw moment of a Bernoulli(q) equals q, so the moment-to-cumulant
    recursion collapses to kappa_n = q * (1 - sum_j C(n-1, j-1) kappa_j).
    """
    kappas = []  # per-prime arrays, built up to k_max
    totals = []
    for n in range(1, k_max + 1):
        acc = np.zeros_like(q)
        for j in range(1, n):
            acc += math.comb(n - 1, j - 1) * kappas[j - 1]
        k_n = q * (1.0 - acc)
        kappas.append(k_n)
        totals.append(np.sum(k_n))
    return totals


def _moments_from_cumulants(kappa: list[float], k_max: int, first: float) -> list[float]:
    """Moments about an origin where the first cumulant is `first` (0 => central)."""
    kap = [first] + [float(k) for k in kappa[1:]]
    mom = [1.0]
    for n in range(1, k_max + 1):
        m = 0.0
        for j in range(1, n + 1):
            m += math.comb(n - 1, j - 1) * kap[j - 1] * mom[n - j]
        mom.append(m)
    return mom[1:]


def exact_moments(fam: BernoulliFamily, k_max: int) -> MomentReport:
    """Raw and central moments of R(Z) via cumulant accumulation (no truncation)."""
    if not 1 <= k_max <= MAX_K:
        raise ValueError(f"k_max must be in 1..{MAX_K}, got {k_max}")
    totals = np.zeros(k_max, dtype=np.longdouble)
    chunk = 1 << 20
    rho = fam.rho_floats(np.longdouble)
    for lo in range(0, len(rho), chunk):
        totals += _bernoulli_cumulants(rho[lo : lo + chunk], k_max)
    kappa = [float(t) for t in totals]
    raw = _moments_from_cumulants(kappa, k_max, first=kappa[0])
    central = _moments_from_cumulants(kappa, k_max, first=0.0)
    return MomentReport(source="model-exact", X=None, Z=fam.cutoff_Z,
                        raw=raw, central=central)


def recentered_moments(central: list[float], mean: float, center: float) -> list[float]:
    """Moments about `center` from central moments and the true mean."""
    delta = mean - center
    full = [1.0, 0.0] + central[1:]
    out = []
    for k in range(1, len(central) + 1):
        out.append(math.fsum(math.comb(k, j) * full[j] * delta ** (k - j)
                             for j in range(0, k + 1)))
    return out


def standardized_moments(fam: BernoulliFamily, X: float, k_max: int) -> MomentReport:
    """Moments of (R(Z) - loglog X), scaled by loglog(X)^(k/2).

    The centering is at loglog X (the limit normalizer), not at the exact
    mean of R(Z); the k-th entry tends to the k-th Gaussian moment.
    """
    mu = loglog_mean(X)
    report = exact_moments(fam, k_max)
    about_mu = recentered_moments(report.central, mean=report.raw[0], center=mu)
    report.source = "model-exact"
    report.X = float(X)
    report.standardized = [about_mu[k - 1] / mu ** (k / 2.0) for k in range(1, k_max + 1)]
    return report


def paper_cutoff(spec: FamilySpec, X: float, k: int) -> int:
    """floor(X ** (alpha / (2 k (beta + 1)))), exactly when X is integral."""
    if X < 2:
        return 1 if X >= 1 else 0
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    expo = spec.alpha / (2 * k * (spec.beta + 1))
    if float(X).is_integer():
        target = int(X) ** expo.numerator
        root = expo.denominator
        m = int(round(target ** (1.0 / root)))
        m = max(m, 1)
        while m**root > target:
            m -= 1
        while (m + 1) ** root <= target:
            m += 1
        return m
    return int(math.floor(X ** float(expo)))


def _sample_block(args) -> np.ndarray:
    thresholds, seed, block_index, block_len = args
    counts = np.zeros(block_len, dtype=np.int64)
    for ci in range(0, len(thresholds), _PRIME_CHUNK):
        chunk = thresholds[ci : ci + _PRIME_CHUNK]
        key = np.array([seed, (block_index << 32) | (ci // _PRIME_CHUNK)],
                       dtype=np.uint64)
        raw = np.random.Philox(key=key).random_raw(block_len * len(chunk))
        hits = raw.reshape(block_len, len(chunk)) < chunk[np.newaxis, :]
        counts += hits.sum(axis=1, dtype=np.int64)
    return np.bincount(counts)


def sample(fam: BernoulliFamily, n: int, seed: int, workers: int = 1) -> Histogram:
    """Histogram of n independent draws of R(Z).

    Counter-based streams are keyed by (seed, draw block, prime chunk), so the
    result depends only on (fam, n, seed) and never on the worker count.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rho = fam.rho_floats()
    # u64 threshold comparison: P(raw < t) = t / 2^64, exact to within 2^-64
    thresholds = (rho * float(2**64)).astype(np.uint64)
    seed = seed & (2**64 - 1)
    jobs = [(thresholds, seed, j, min(_SAMPLE_BLOCK, n - j * _SAMPLE_BLOCK))
            for j in range((n + _SAMPLE_BLOCK - 1) // _SAMPLE_BLOCK)]
    if workers > 1:
        with Pool(workers) as pool:
            parts = pool.map(_sample_block, jobs, chunksize=1)
    else:
        parts = [_sample_block(j) for j in jobs]
    width = max(len(p) for p in parts)
    counts = np.zeros(width, dtype=np.int64)
    for p in parts:
        counts[: len(p)] += p
    label = f"model d={fam.spec.degree} Z={fam.cutoff_Z} n={n} seed={seed}"
    return Histogram.from_counts(counts, label=label)
