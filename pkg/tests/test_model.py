import math
from fractions import Fraction

import numpy as np
import pytest

from ramlab.densities import FamilySpec, local_density
from ramlab.model import (BernoulliFamily, exact_distribution, exact_moments,
                          paper_cutoff, recentered_moments, sample,
                          standardized_moments)


def fam(d, Z):
    return BernoulliFamily.create(FamilySpec.for_degree(d), Z)


def test_family_probabilities():
    f = fam(2, 10)
    assert [p for p, _ in f.probabilities] == [2, 3, 5, 7]
    assert f.probabilities[0][1] == Fraction(1, 3)
    rho = f.rho_floats()
    assert np.allclose(rho, [1 / 3, 1 / 4, 1 / 6, 1 / 8])
    with pytest.raises(ValueError):
        BernoulliFamily.create(FamilySpec.for_degree(2), 1)


def test_exact_distribution_single_prime():
    dist = exact_distribution(fam(2, 2), cap=4)
    assert np.allclose(dist.mass, [2 / 3, 1 / 3, 0, 0, 0], atol=1e-15)
    assert dist.tail_mass == 0.0


def test_exact_distribution_two_primes():
    # convolution of Bernoulli(1/3) and Bernoulli(1/4)
    dist = exact_distribution(fam(2, 3), cap=4)
    assert abs(dist.mass[2] - 1 / 12) < 1e-15
    assert abs(dist.mass[0] - 1 / 2) < 1e-15


def test_exact_distribution_tail():
    dist = exact_distribution(fam(3, 100), cap=1)
    assert dist.tail_mass > 0
    assert dist.mass_defect() < 1e-12
    with pytest.raises(ValueError):
        exact_distribution(fam(3, 100), cap=0)


def test_exact_moments_hand_values():
    rep = exact_moments(fam(2, 3), 4)
    assert abs(rep.raw[0] - 7 / 12) < 1e-15
    assert abs(rep.central[1] - 59 / 144) < 1e-15
    assert rep.central[0] == 0.0
    with pytest.raises(ValueError):
        exact_moments(fam(2, 3), 0)
    with pytest.raises(ValueError):
        exact_moments(fam(2, 3), 13)


def test_moment_paths_agree():
    for d in (2, 5):
        for Z in (100, 1000):
            f = fam(d, Z)
            dist = exact_distribution(f, cap=len(f.primes) + 1)
            rep = exact_moments(f, 6)
            mean = dist.moment(1)
            assert abs(mean - rep.raw[0]) < 1e-9
            for k in range(2, 7):
                assert abs(dist.moment(k, center=mean) - rep.central[k - 1]) < 1e-9


def test_recentered_moments_shift():
    # central moments of a known distribution, recentered: E((X - c)^2)
    central = [0.0, 2.0, 0.5]
    about = recentered_moments(central, mean=5.0, center=4.0)
    assert abs(about[0] - 1.0) < 1e-15          # E(X) - c
    assert abs(about[1] - (2.0 + 1.0)) < 1e-15  # var + delta^2
    assert abs(about[2] - (0.5 + 3 * 2.0 * 1.0 + 1.0)) < 1e-15


def test_standardized_moments_match_definition():
    f = fam(3, 1000)
    X = 1e6
    rep = standardized_moments(f, X, 4)
    mu = math.log(math.log(X))
    dist = exact_distribution(f, cap=len(f.primes) + 1)
    for k in (1, 2, 3, 4):
        direct = dist.moment(k, center=mu) / mu ** (k / 2)
        assert abs(rep.standardized[k - 1] - direct) < 1e-9


def test_paper_cutoff_examples():
    assert paper_cutoff(FamilySpec.for_degree(3), 10**8, 4) == 1
    assert paper_cutoff(FamilySpec.for_degree(2), 10**8, 1) == 10**4
    assert paper_cutoff(FamilySpec.for_degree(5), 2, 50) == 1
    # exact boundary: m**q <= X**p must hold for the returned m
    spec = FamilySpec.for_degree(2)
    for k in (1, 2, 3):
        expo = spec.alpha / (2 * k * (spec.beta + 1))
        for X in (10**4, 10**6, 123456):
            m = paper_cutoff(spec, X, k)
            assert m ** expo.denominator <= X ** expo.numerator
            assert (m + 1) ** expo.denominator > X ** expo.numerator


def test_sample_deterministic_across_workers():
    f = fam(2, 100)
    h1 = sample(f, 20000, seed=42)
    h2 = sample(f, 20000, seed=42, workers=2)
    h8 = sample(f, 20000, seed=42, workers=8)
    assert h1.bins == h2.bins == h8.bins
    assert h1.total == 20000
    assert sample(f, 20000, seed=43).bins != h1.bins
    with pytest.raises(ValueError):
        sample(f, 0, seed=1)


def test_sample_single_draw():
    h = sample(fam(2, 2), 1, seed=9)
    assert h.total == 1


def test_sample_concentration():
    # Bernoulli(1/3): bin-1 frequency within 5 sqrt(n p(1-p)) of n/3
    n = 10**6
    h = sample(fam(2, 2), n, seed=42, workers=2)
    ones = h.bins.get(1, 0)
    assert abs(ones - n / 3) <= 5 * math.sqrt(n * (1 / 3) * (2 / 3))


def test_sample_mean_versus_exact():
    n = 200000
    f = fam(3, 1000)
    h = sample(f, n, seed=7, workers=2)
    rep = exact_moments(f, 2)
    se = math.sqrt(rep.central[1] / n)
    assert abs(h.mean() - rep.raw[0]) <= 5 * se


def test_model_json_fields():
    rep = exact_moments(fam(2, 10), 3)
    d = rep.to_json_dict()
    assert set(d) == {"source", "X", "Z", "k", "raw", "central", "standardized"}
    dist = exact_distribution(fam(2, 10), cap=8)
    j = dist.to_json_dict()
    assert set(j) == {"mass", "tail_mass"}
