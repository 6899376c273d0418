from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from scipy import stats as sps

from viciouswalk.bijection import class_two_walk, lds_involution
from viciouswalk.stats import (
    EmpiricalCdf,
    SampleBatch,
    chi,
    exact_L_distribution,
    ks_distance,
    sample_batch,
    sample_involution,
    sample_L,
)
from viciouswalk.walks import max_displacement


def test_sample_involution_n1():
    rng = np.random.default_rng(0)
    assert all(sample_involution(1, rng).sigma == (2, 1) for _ in range(20))


def test_sample_involution_uniform_n2():
    rng = np.random.default_rng(1)
    freq = Counter(sample_involution(2, rng).sigma for _ in range(30000))
    assert set(freq) == {(2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)}
    for v in freq.values():
        assert abs(v / 30000 - 1 / 3) <= 0.01


def test_seed_determinism():
    a = sample_batch(30, 50, seed=9)
    b = sample_batch(30, 50, seed=9)
    assert np.array_equal(a.values, b.values)
    assert not np.array_equal(a.values, sample_batch(30, 50, seed=10).values)


def test_parallel_batches_reproducible():
    a = sample_batch(20, 40, seed=3, jobs=2)
    b = sample_batch(20, 40, seed=3, jobs=2)
    assert len(a) == 40 and np.array_equal(a.values, b.values)


def test_sample_L_small():
    rng = np.random.default_rng(2)
    assert {sample_L(1, rng) for _ in range(10)} == {1}


def test_exact_distributions():
    assert exact_L_distribution(2) == {1: Fraction(2, 3), 2: Fraction(1, 3)}
    assert exact_L_distribution(3)[1] == Fraction(5, 15)
    for N in range(1, 6):
        assert sum(exact_L_distribution(N).values()) == 1


def test_sample_L_law_n3():
    rng = np.random.default_rng(4)
    n = 20000
    counts = Counter(sample_L(3, rng) for _ in range(n))
    for p, prob in exact_L_distribution(3).items():
        prob = float(prob)
        se = (prob * (1 - prob) / n) ** 0.5
        assert abs(counts[p] / n - prob) <= 3 * se + 1e-12


def test_chi_values():
    assert chi(50, 10) == 0.0
    assert chi(50, 12) == pytest.approx(4 * 100 ** (-1 / 6), rel=1e-14)
    assert chi(2, 2) == 0.0
    ls = np.arange(1, 101)
    assert np.all(np.diff(chi(100, ls)) > 0)


def test_batch_invariants():
    b = SampleBatch(10, 0, np.array([1, 3, 10]))
    assert np.allclose(b.chis, chi(10, b.values))
    with pytest.raises(ValueError):
        SampleBatch(10, 0, np.array([0, 3]))
    with pytest.raises(ValueError):
        SampleBatch(10, 0, np.array([11]))


def test_L_matches_reconstructed_walk():
    rng = np.random.default_rng(6)
    for k in range(1000):
        N = 1 + k % 6
        s = sample_involution(N, rng)
        assert max_displacement(class_two_walk(s)) == lds_involution(s) // 2


def test_empirical_cdf():
    c = EmpiricalCdf([3.0, 1.0, 2.0, 2.0])
    assert list(c([0.5, 1.0, 1.5, 2.0, 3.0, 9.0])) == [0.0, 0.25, 0.25, 0.75, 1.0, 1.0]
    assert list(c.left_limit([1.0, 2.0, 3.0])) == [0.0, 0.25, 0.75]


def test_ks_against_own_law():
    rng = np.random.default_rng(7)
    c = EmpiricalCdf(rng.standard_normal(100_000))
    assert ks_distance(c, sps.norm.cdf) <= 0.01


def test_ks_point_mass_at_median():
    assert ks_distance(EmpiricalCdf([0.0]), sps.norm.cdf) == pytest.approx(0.5)


def test_ks_identical_step_functions():
    c = EmpiricalCdf([1, 2, 2, 5])
    assert ks_distance(c, EmpiricalCdf([5, 2, 1, 2])) == 0.0
