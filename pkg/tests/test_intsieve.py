import collections

import numpy as np
import pytest

from ramlab.intsieve import Histogram, omega_histogram, omega_of, omega_table


def test_omega_of_examples():
    assert omega_of(1) == 0
    assert omega_of(12) == 2
    assert omega_of(1024) == 1
    assert omega_of(2 * 3 * 5 * 7 * 11) == 5
    with pytest.raises(ValueError):
        omega_of(0)


def test_histogram_x10():
    h = omega_histogram(10)
    assert h.bins == {1: 7, 2: 2}
    assert h.total == 9


def test_histogram_matches_brute_force():
    X = 30000
    brute = collections.Counter(omega_of(n) for n in range(2, X + 1))
    h = omega_histogram(X)
    assert h.bins == dict(brute)
    assert h.total == X - 1


def test_partition_invariance():
    X = 250000
    ref = omega_histogram(X, segment_size=1 << 20)
    for seg in (1 << 10, 1 << 16):
        assert omega_histogram(X, segment_size=seg) == ref
    for workers in (2, 4):
        assert omega_histogram(X, workers=workers) == ref


def test_argument_validation():
    with pytest.raises(ValueError):
        omega_histogram(1)
    with pytest.raises(ValueError):
        omega_histogram(100, segment_size=512)


def test_omega_table_agrees_with_omega_of():
    t = omega_table(5000)
    for n in range(1, 5001):
        assert t[n] == omega_of(n)


def test_histogram_merge():
    a = Histogram({1: 3, 2: 5}, total=8)
    b = Histogram({2: 1, 4: 2}, total=3)
    a.merge(b)
    assert a.bins == {1: 3, 2: 6, 4: 2}
    assert a.total == 11


def test_histogram_mean_and_empty():
    h = Histogram({2: 2, 4: 2}, total=4)
    assert h.mean() == 3.0
    with pytest.raises(ValueError):
        Histogram().mean()
