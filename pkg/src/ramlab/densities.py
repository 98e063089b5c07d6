"""Exact local densities of ramified primes, Gaussian moments, and log log X.

Everything here is exact rational arithmetic (fractions.Fraction); floats
appear only in loglog_mean, which feeds the statistics layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .primes import is_prime

E = math.e

# degree -> (error exponent alpha, modulus exponent beta)
_EXPONENTS = {
    2: (Fraction(1, 2), Fraction(-1, 2)),
    3: (Fraction(1, 6), Fraction(2, 3)),
    4: (Fraction(1, 240), Fraction(9, 10)),
    5: (Fraction(1, 200), Fraction(1)),
}

# degree -> coefficients of the local series 1 + c1/p + c2/p^2 + ... whose
# reciprocal defect gives the density of p-ramified fields
_LOCAL_SERIES = {
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 1, 2, 1),
    5: (1, 1, 2, 2, 1),
}


@dataclass(frozen=True)
class FamilySpec:
    """A degree-d family of number fields with its density exponents."""

    degree: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        if self.degree not in _EXPONENTS:
            raise ValueError(f"degree must be 2..5, got {self.degree}")
        if (self.alpha, self.beta) != _EXPONENTS[self.degree]:
            raise ValueError(
                f"degree {self.degree} requires (alpha, beta) = "
                f"{_EXPONENTS[self.degree]}, got {(self.alpha, self.beta)}"
            )

    @classmethod
    def for_degree(cls, degree: int) -> "FamilySpec":
        if degree not in _EXPONENTS:
            raise ValueError(f"degree must be 2..5, got {degree}")
        alpha, beta = _EXPONENTS[degree]
        return cls(degree, alpha, beta)


def local_density(spec: FamilySpec, p: int) -> Fraction:
    """Density of degree-d fields ramified at the prime p, as an exact rational.

    For d = 2 this reduces to 1/(p+1); for d = 3 to (p+1)/(p^2+p+1).
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    series = sum(Fraction(c, p**i) for i, c in enumerate(_LOCAL_SERIES[spec.degree]))
    return 1 - 1 / series


def factor_squarefree(q: int) -> list[int]:
    """Prime factors of a squarefree q >= 1; rejects 0 and repeated primes."""
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")
    primes = []
    n = q
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                raise ValueError(f"q = {q} is not squarefree: {f}^2 divides it")
            primes.append(f)
        f += 1 if f == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


def density(spec: FamilySpec, q: int) -> Fraction:
    """Multiplicative density over the prime divisors of squarefree q; density(1) = 1."""
    result = Fraction(1)
    for p in factor_squarefree(q):
        result *= local_density(spec, p)
    return result


def gaussian_moment(k: int) -> int:
    """k-th moment of the standard Gaussian: k!/(2^(k/2) (k/2)!) for even k, else 0."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k % 2 == 1:
        return 0
    half = k // 2
    return math.factorial(k) // (2**half * math.factorial(half))


def loglog_mean(X: float) -> float:
    """The shared mean/variance normalizer log log X; requires X > e."""
    if X <= E:
        raise ValueError(f"loglog_mean needs X > e, got {X}")
    return math.log(math.log(X))
