"""Segmented sieve for omega(n), the number of distinct prime factors.

The additive sieve counts, for every n in a segment, its prime factors up to
sqrt(n); whatever is left over after dividing those out is either 1 or a
single prime larger than sqrt(n), so one comparison finishes the count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from multiprocessing import Pool

import numpy as np

from .primes import primes_up_to

MIN_SEGMENT = 1 << 10


@dataclass
class Histogram:
    """Exact integer counts indexed by omega value."""

    bins: dict[int, int] = field(default_factory=dict)
    total: int = 0
    label: str = ""

    def add(self, value: int, count: int = 1) -> None:
        self.bins[value] = self.bins.get(value, 0) + count
        self.total += count

    def merge(self, other: "Histogram") -> "Histogram":
        for k, v in other.bins.items():
            self.bins[k] = self.bins.get(k, 0) + v
        self.total += other.total
        return self

    @classmethod
    def from_counts(cls, counts: np.ndarray, label: str = "") -> "Histogram":
        h = cls(label=label)
        for k, v in enumerate(np.asarray(counts)):
            if v:
                h.bins[k] = int(v)
                h.total += int(v)
        return h

    def as_sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.bins.items())

    def mean(self) -> float:
        if self.total == 0:
            raise ValueError("empty histogram has no mean")
        return sum(k * v for k, v in self.bins.items()) / self.total

    def __eq__(self, other) -> bool:
        if not isinstance(other, Histogram):
            return NotImplemented
        return self.bins == other.bins and self.total == other.total


def omega_of(n: int) -> int:
    """omega(n) by trial division; the reference oracle for the sieves."""
    if n < 1:
        raise ValueError(f"omega is defined for n >= 1, got {n}")
    count = 0
    for p in (2, 3):
        if n % p == 0:
            count += 1
            while n % p == 0:
                n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):  # 6k-1, 6k+1 wheel
            if n % p == 0:
                count += 1
                while n % p == 0:
                    n //= p
        f += 6
    if n > 1:
        count += 1
    return count


def omega_segment(lo: int, hi: int, small_primes: np.ndarray) -> np.ndarray:
    """omega(n) for n in [lo, hi) as a uint8 array.

    small_primes must contain every prime <= sqrt(hi - 1).  The leftover
    cofactor after stripping those primes is 1 or a single large prime, so
    a product comparison supplies the final +1.
    """
    n = hi - lo
    omega = np.zeros(n, dtype=np.uint8)
    prod = np.ones(n, dtype=np.uint64)
    top = hi - 1
    for p in small_primes:
        p = int(p)
        if p * p > top:
            break
        start = ((lo + p - 1) // p) * p - lo
        omega[start::p] += 1
        pe = p
        while pe <= top:
            start = ((lo + pe - 1) // pe) * pe - lo
            prod[start::pe] *= np.uint64(p)
            pe *= p
    values = np.arange(lo, hi, dtype=np.uint64)
    omega[prod < values] += 1
    return omega


def _segment_counts(args: tuple[int, int, np.ndarray]) -> np.ndarray:
    lo, hi, small_primes = args
    return np.bincount(omega_segment(lo, hi, small_primes), minlength=16)


def omega_histogram(X: int, segment_size: int = 1 << 20, workers: int = 1) -> Histogram:
    """Histogram of omega(n) over 2 <= n <= X (n = 1 carries omega 0 and is excluded).

    The result is independent of segment_size and of the worker count: the
    segments partition [2, X] and the per-segment counts add exactly.
    """
    if X < 2:
        raise ValueError(f"omega_histogram needs X >= 2, got {X}")
    if segment_size < MIN_SEGMENT:
        raise ValueError(f"segment_size must be >= {MIN_SEGMENT}, got {segment_size}")
    small_primes = primes_up_to(math.isqrt(X))
    jobs = [(lo, min(lo + segment_size, X + 1), small_primes)
            for lo in range(2, X + 1, segment_size)]
    if workers > 1:
        with Pool(workers) as pool:
            parts = pool.map(_segment_counts, jobs, chunksize=4)
    else:
        parts = [_segment_counts(j) for j in jobs]
    counts = np.sum(np.vstack(parts), axis=0)
    return Histogram.from_counts(counts, label=f"omega(n), 2 <= n <= {X}")


def omega_table(X: int, segment_size: int = 1 << 22) -> np.ndarray:
    """uint8 array t with t[n] = omega(n) for 0 <= n <= X (t[0] = t[1] = 0).

    This is the lookup table the cubic enumerator uses to read off
    omega(|disc|) for tens of millions of discriminants.
    """
    if X < 1:
        raise ValueError(f"omega_table needs X >= 1, got {X}")
    small_primes = primes_up_to(math.isqrt(X))
    table = np.zeros(X + 1, dtype=np.uint8)
    for lo in range(2, X + 1, segment_size):
        hi = min(lo + segment_size, X + 1)
        table[lo:hi] = omega_segment(lo, hi, small_primes)
    return table
