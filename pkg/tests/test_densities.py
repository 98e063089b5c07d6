import math
import random
from fractions import Fraction

import pytest

from ramlab.densities import (FamilySpec, density, factor_squarefree,
                              gaussian_moment, local_density, loglog_mean)
from ramlab.primes import is_prime, primes_up_to


def spec(d):
    return FamilySpec.for_degree(d)


def test_family_spec_table():
    assert spec(2).alpha == Fraction(1, 2) and spec(2).beta == Fraction(-1, 2)
    assert spec(3).alpha == Fraction(1, 6) and spec(3).beta == Fraction(2, 3)
    assert spec(4).alpha == Fraction(1, 240) and spec(4).beta == Fraction(9, 10)
    assert spec(5).alpha == Fraction(1, 200) and spec(5).beta == Fraction(1)
    with pytest.raises(ValueError):
        FamilySpec.for_degree(6)
    with pytest.raises(ValueError):
        FamilySpec(3, Fraction(1, 2), Fraction(2, 3))


def test_local_density_examples():
    assert local_density(spec(2), 2) == Fraction(1, 3)
    assert local_density(spec(3), 2) == Fraction(3, 7)
    assert local_density(spec(5), 2) == Fraction(21, 37)


def test_local_density_closed_forms():
    for p in primes_up_to(500).tolist():
        assert local_density(spec(2), p) == Fraction(1, p + 1)
        assert local_density(spec(3), p) == Fraction(p + 1, p * p + p + 1)


def test_local_density_rejects_composites():
    for bad in (1, 4, 6, 9, 100):
        with pytest.raises(ValueError):
            local_density(spec(3), bad)


def test_density_examples():
    assert density(spec(3), 1) == 1
    assert density(spec(3), 6) == Fraction(12, 91)
    with pytest.raises(ValueError, match="2"):
        density(spec(2), 12)
    with pytest.raises(ValueError):
        density(spec(2), 0)


def test_density_multiplicative_on_random_coprime_pairs():
    rng = random.Random(0)
    primes = primes_up_to(200).tolist()
    s = spec(4)
    for _ in range(1000):
        ps = rng.sample(primes, rng.randint(2, 6))
        cut = rng.randint(1, len(ps) - 1)
        q1 = math.prod(ps[:cut])
        q2 = math.prod(ps[cut:])
        assert density(s, q1) * density(s, q2) == density(s, q1 * q2)


def test_local_density_asymptotics():
    # p * rho_d(p) -> 1, with |p rho - 1| < 2/p for every p and d
    for d in (2, 3, 4, 5):
        for p in primes_up_to(1000).tolist():
            rho = local_density(spec(d), p)
            assert 0 < rho < 1
            assert abs(p * rho - 1) < Fraction(2, p)


def test_gaussian_moments():
    assert [gaussian_moment(k) for k in (0, 1, 2, 3, 4, 5, 6, 8)] == [1, 0, 1, 0, 3, 0, 15, 105]
    for k in range(0, 20, 2):
        assert gaussian_moment(k + 2) == (k + 1) * gaussian_moment(k)
    with pytest.raises(ValueError):
        gaussian_moment(-1)


def test_loglog_mean():
    assert abs(loglog_mean(math.e**math.e) - 1.0) < 1e-12
    assert abs(loglog_mean(1e8) - 2.9135) < 1e-3
    with pytest.raises(ValueError):
        loglog_mean(2.0)
    with pytest.raises(ValueError):
        loglog_mean(math.e)


def test_factor_squarefree():
    assert factor_squarefree(1) == []
    assert factor_squarefree(30) == [2, 3, 5]
    with pytest.raises(ValueError, match="3"):
        factor_squarefree(18)


def test_is_prime_matches_sieve():
    table = set(primes_up_to(2000).tolist())
    for n in range(2000):
        assert is_prime(n) == (n in table)
