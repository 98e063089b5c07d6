"""Quadratic fields, enumerated exactly as fundamental discriminants.

D is a fundamental discriminant iff D != 1 and either D = 1 (mod 4) and D is
squarefree, or D = 4m with m squarefree and m = 2, 3 (mod 4).  A squarefree
sieve over m yields squarefreeness and omega in the same pass; the two
congruence branches then emit both signs in order of |D|, positive first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .intsieve import omega_segment
from .primes import primes_up_to


@dataclass
class FieldRecord:
    """One number field: discriminant, omega(|disc|), cyclic Galois flag."""

    discriminant: int
    omega: int
    is_cyclic: bool = True  # quadratic fields are always cyclic


def squarefree_segment(lo: int, hi: int, small_primes: np.ndarray) -> np.ndarray:
    """Boolean array over [lo, hi): True where the integer is squarefree."""
    flags = np.ones(hi - lo, dtype=bool)
    top = hi - 1
    for p in small_primes:
        p2 = int(p) * int(p)
        if p2 > top:
            break
        start = ((lo + p2 - 1) // p2) * p2 - lo
        flags[start::p2] = False
    return flags


def fundamental_batches(X: int, segment_size: int = 1 << 20) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (disc, omega) array batches for all |D| <= X, ordered by |D|.

    Ties at the same |D| (e.g. +8 and -8) emit the positive one first.
    """
    if X < 3:
        raise ValueError(f"quadratic enumeration needs X >= 3, got {X}")
    small_primes = primes_up_to(math.isqrt(X))
    for lo in range(2, X + 1, segment_size):
        hi = min(lo + segment_size, X + 1)
        discs = []
        omegas = []

        # odd branch: |D| = m for squarefree odd m, sign from m mod 4
        sq = squarefree_segment(lo, hi, small_primes)
        om = omega_segment(lo, hi, small_primes)
        m = np.arange(lo, hi, dtype=np.int64)
        res = m & 3
        pos = sq & (res == 1)
        neg = sq & (res == 3)
        discs.append(np.where(pos, m, -m)[pos | neg])
        omegas.append(om[pos | neg])

        # 4m branch: |D| = 4m, + for m = 2,3 (mod 4), - for m = 1,2 (mod 4)
        mlo = (lo + 3) // 4
        mhi = (hi - 1) // 4 + 1
        if mlo < 2:
            mlo = 1  # m = 1 gives D = -4
        if mhi > mlo:
            sq4 = squarefree_segment(mlo, mhi, small_primes)
            om4 = omega_segment(mlo, mhi, small_primes)
            m4 = np.arange(mlo, mhi, dtype=np.int64)
            keep = sq4 & (4 * m4 >= lo) & (4 * m4 <= min(hi - 1, X))
            res4 = m4 & 3
            # omega(4m): add the prime 2 unless m is already even
            w4 = om4 + (res4 & 1).astype(np.uint8)
            both = keep & (res4 == 2)
            only_pos = keep & (res4 == 3)
            only_neg = keep & (res4 == 1)
            discs.append(4 * m4[only_pos | both])
            omegas.append(w4[only_pos | both])
            discs.append(-4 * m4[only_neg | both])
            omegas.append(w4[only_neg | both])

        d_all = np.concatenate(discs)
        w_all = np.concatenate(omegas)
        order = np.lexsort((d_all < 0, np.abs(d_all)))
        yield d_all[order], w_all[order].astype(np.int64)


def enumerate_fundamental_discriminants(X: int) -> Iterator[FieldRecord]:
    """Stream one FieldRecord per quadratic field with |D| <= X, by |D|."""
    for discs, omegas in fundamental_batches(X):
        for D, w in zip(discs.tolist(), omegas.tolist()):
            yield FieldRecord(discriminant=D, omega=w, is_cyclic=True)


def count_fundamental(X: int) -> int:
    return sum(len(d) for d, _ in fundamental_batches(X))


def quadratic_divisibility_ratio(X: int, q: int) -> float:
    """Fraction of fundamental discriminants |D| <= X with q | D (q squarefree)."""
    from .densities import factor_squarefree

    factor_squarefree(q)  # validates squarefreeness, names the repeated prime
    hits = 0
    total = 0
    for discs, _ in fundamental_batches(X):
        hits += int(np.count_nonzero(discs % q == 0))
        total += len(discs)
    return hits / total
