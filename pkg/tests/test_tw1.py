import math
import warnings

import numpy as np
import pytest
from scipy.stats import ks_2samp

from viciouswalk.stats import ks_distance
from viciouswalk.tw1 import (
    F1Table,
    airy,
    build_f1_table,
    goe_mc_cdf,
    goe_mc_samples,
    goe_scaled_edge,
)


def airy_maclaurin(x, terms=80):
    """Ai(x) = c1 f(x) - c2 g(x) from the two power series; fine for |x| <= 3."""
    c1 = 3 ** (-2 / 3) / math.gamma(2 / 3)
    c2 = 3 ** (-1 / 3) / math.gamma(1 / 3)
    f, g = 0.0, 0.0
    tf, tg = 1.0, x
    for k in range(terms):
        f += tf
        g += tg
        tf *= x**3 / ((3 * k + 2) * (3 * k + 3))
        tg *= x**3 / ((3 * k + 3) * (3 * k + 4))
    return c1 * f - c2 * g


@pytest.fixture(scope="module")
def table():
    return build_f1_table()


def test_airy_at_zero():
    expected = 3 ** (-2 / 3) / math.gamma(2 / 3)
    assert airy(0.0) == pytest.approx(expected, rel=1e-14)
    assert airy(0.0) == pytest.approx(0.3550280538878172, rel=1e-12)


@pytest.mark.parametrize("x", np.linspace(-3, 3, 13))
def test_airy_against_series(x):
    assert airy(x) == pytest.approx(airy_maclaurin(x), rel=1e-10, abs=1e-14)


def test_airy_decays_monotonically():
    xs = np.linspace(0, 15, 301)
    v = airy(xs)
    assert np.all(np.diff(v) < 0) and np.all(v > 0)


def test_airy_oscillation_envelope():
    # Ai(-x) ~ pi^{-1/2} x^{-1/4} sin(2/3 x^{3/2} + pi/4)
    for x in (8.0, 10.0, 14.0):
        zeta = 2 / 3 * x**1.5
        approx = x ** (-0.25) / math.sqrt(math.pi) * math.sin(zeta + math.pi / 4)
        assert airy(-x) == pytest.approx(approx, abs=0.01 * x ** (-0.25))


def test_airy_domain():
    with pytest.raises(OverflowError):
        airy(20.0)


def test_table_shape(table):
    assert table.values[0] < 0.005 and table.values[-1] > 0.999
    assert np.all(np.diff(table.values) >= 0)
    assert np.all(np.diff(table.f2) >= 0)
    assert np.all(table.values <= np.sqrt(table.f2) + 1e-15)


def test_known_moments(table):
    density = np.gradient(table.values, table.grid)
    mean = np.trapezoid(table.grid * density, table.grid)
    var = np.trapezoid(table.grid**2 * density, table.grid) - mean**2
    # GOE Tracy-Widom: mean -1.2065335745820, variance 1.6077810345810
    assert mean == pytest.approx(-1.2065335745820, abs=2e-4)
    assert var == pytest.approx(1.6077810345810, abs=2e-3)


def test_f2_mean(table):
    density = np.gradient(table.f2, table.grid)
    # GUE Tracy-Widom mean -1.7710868074
    assert np.trapezoid(table.grid * density, table.grid) == pytest.approx(-1.7710868074, abs=2e-3)


def test_step_halving(table):
    coarse = build_f1_table(max_step=0.02)
    fine = build_f1_table(max_step=0.01)
    assert np.max(np.abs(coarse.values - fine.values)) < 1e-6
    assert np.max(np.abs(table.values - fine.values)) < 1e-6


def test_cdf_clamps_with_flag(table):
    v, flag = table.cdf(-10.0, return_flag=True)
    assert v == 0.0 and flag
    v, flag = table.cdf(0.0, return_flag=True)
    assert 0.8 < v < 0.85 and not flag
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert table.cdf(9.0) == 1.0
    assert caught


def test_csv_round_trip(tmp_path, table):
    path = tmp_path / "f1.csv"
    table.to_csv(path)
    loaded = F1Table.from_csv(path)
    assert np.allclose(loaded.values, table.values, rtol=0, atol=1e-14)
    assert loaded(-1.0) == pytest.approx(table(-1.0), abs=1e-12)


def test_scaling():
    M = 100
    assert goe_scaled_edge(math.sqrt(2 * M), M) == 0.0
    assert goe_scaled_edge(math.sqrt(2 * M) + 1 / (math.sqrt(2) * M ** (1 / 6)), M) == pytest.approx(1.0)


def test_goe_mc_reproducible_and_supported():
    a = goe_mc_samples(60, 300, np.random.default_rng(3))
    b = goe_mc_samples(60, 300, np.random.default_rng(3))
    assert np.array_equal(a, b)
    assert np.all((a > -6) & (a < 4))


def test_tridiagonal_matches_dense():
    dense = goe_mc_samples(50, 2000, np.random.default_rng(11), method="dense")
    tri = goe_mc_samples(50, 2000, np.random.default_rng(12), method="tridiagonal")
    assert ks_2samp(dense, tri).pvalue > 0.001


def test_goe_mc_ks_small(table):
    c = goe_mc_cdf(200, 4000, np.random.default_rng(5))
    assert ks_distance(c, table) <= 0.05


@pytest.mark.slow
def test_goe_mc_median_near_table(table):
    # the median shifts by roughly -3 M^(-2/3) at finite M, so M must be large
    # for a 0.02 agreement
    s = goe_mc_samples(5000, 20000, np.random.default_rng(21))
    assert abs(np.median(s) - table.quantile(0.5)) <= 0.02
