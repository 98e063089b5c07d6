"""Prime generation shared by the sieves and the field enumerators."""

from __future__ import annotations

import math

import numpy as np


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (n is at desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (Eratosthenes on the odd numbers)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    if limit < 3:
        return np.array([2], dtype=np.int64)
    # odd[i] represents 2i + 1; index 0 (the number 1) is never prime
    odd = np.ones((limit + 1) // 2, dtype=bool)
    odd[0] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if odd[p // 2]:
            odd[p * p // 2 :: p] = False
    primes = 2 * np.nonzero(odd)[0] + 1
    return np.concatenate(([2], primes)).astype(np.int64)


def iter_prime_blocks(limit: int, block_size: int = 1 << 22):
    """Yield int64 arrays of primes covering [2, limit] in increasing blocks.

    Keeps memory bounded when limit is large (10^8): only a boolean segment
    and the base primes up to sqrt(limit) are held at once.
    """
    if limit < 2:
        return
    base = primes_up_to(math.isqrt(limit))
    yield base[base <= limit]
    lo = math.isqrt(limit) + 1
    while lo <= limit:
        hi = min(lo + block_size, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            start = ((lo + p - 1) // p) * p
            if start < hi:
                seg[start - lo :: p] = False
        yield (np.nonzero(seg)[0] + lo).astype(np.int64)
        lo = hi
