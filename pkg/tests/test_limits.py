"""Limit-law numerics: Borel, Maxwell, excursion maximum, Airy area."""

import math
from collections import Counter
from fractions import Fraction

import pytest
from scipy import integrate

from parkfn import descents
from parkfn.enumeration import all_functions
from parkfn.limits import (
    airy_area_density,
    airy_zeros,
    borel_identity,
    borel_pmf,
    borel_tail,
    bridge_max_cdf,
    coordinate_count_cdf,
    coordinate_count_density,
    descent_sum_moments,
    distribution_handle,
    excursion_max_mean,
    first_coordinate_limit,
    gaussian_cdf,
    max_discrepancy_cdf,
    poisson_pmf,
    xi_moment,
)


def test_borel_pmf_values_and_mass():
    assert borel_pmf(1) == pytest.approx(math.exp(-1))
    assert borel_pmf(2) == pytest.approx(2 * math.exp(-2) / 2)
    assert sum(borel_pmf(j) for j in range(1, 200_000)) == pytest.approx(
        1.0, abs=2e-2
    )  # raw series converges like j^{-1/2}; the tail handles the rest
    assert borel_tail(1) == 1.0
    assert borel_tail(2) == pytest.approx(1 - math.exp(-1), abs=1e-15)
    with pytest.raises(ValueError):
        borel_pmf(0)


def test_borel_tail_is_decreasing():
    values = [borel_tail(j) for j in range(1, 30)]
    assert all(a > b > 0 for a, b in zip(values, values[1:]))


def test_borel_identity_on_grid():
    for x in (0.1, 0.3, 0.5, 0.7, 0.9, 1.0):
        assert borel_identity(x) == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(ValueError):
        borel_identity(0.0)
    with pytest.raises(ValueError):
        borel_identity(1.5)


def test_first_coordinate_limit_corners():
    n = 1000
    assert first_coordinate_limit(n, 1, "low") == pytest.approx(2 / n)
    assert first_coordinate_limit(n, 0, "high") < 1 / n
    with pytest.raises(ValueError):
        first_coordinate_limit(n, 0, "low")
    with pytest.raises(ValueError):
        first_coordinate_limit(n, 1, "middle")


def test_maxwell_density_normalizes():
    for x in (0.2, 0.5, 0.8):
        mass, _ = integrate.quad(lambda y: coordinate_count_density(x, y), 0, 10)
        assert mass == pytest.approx(1.0, abs=1e-10)
    assert coordinate_count_density(0.5, -1.0) == 0.0
    with pytest.raises(ValueError):
        coordinate_count_density(0.0, 1.0)


def test_maxwell_cdf_monotone():
    values = [coordinate_count_cdf(0.5, t) for t in (0.0, 0.2, 0.5, 1.0, 3.0)]
    assert values[0] == 0.0
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] == pytest.approx(1.0, abs=1e-6)


def test_excursion_max_cdf_and_mean():
    assert max_discrepancy_cdf(0.0) == 0.0
    assert max_discrepancy_cdf(5.0) == pytest.approx(1.0, abs=1e-12)
    values = [max_discrepancy_cdf(t) for t in (0.3, 0.6, 0.9, 1.2, 2.0)]
    assert all(0 <= a < b <= 1 for a, b in zip(values, values[1:]))
    assert excursion_max_mean() == pytest.approx(math.sqrt(math.pi / 2), abs=1e-9)


def test_bridge_max_cdf():
    assert bridge_max_cdf(0.0) == 0.0
    assert bridge_max_cdf(1.0) == pytest.approx(1 - math.exp(-2))
    # the excursion maximum dominates the bridge maximum stochastically
    for t in (0.3, 0.6, 1.0, 1.5):
        assert max_discrepancy_cdf(t) <= bridge_max_cdf(t)


def test_xi_moment_matches_quadrature():
    for s in (1.2, 1.5, 1.8):
        direct, _ = integrate.quad(
            lambda t, _s=s: _s * t ** (_s - 1) * (1 - max_discrepancy_cdf(t)), 0, 10
        )
        assert xi_moment(s) == pytest.approx(direct, abs=1e-9)
    with pytest.raises(ValueError):
        xi_moment(2.5)


def test_airy_zeros():
    zeros = airy_zeros(3)
    assert zeros[0] == pytest.approx(-2.3381, abs=5e-5)
    assert zeros[1] == pytest.approx(-4.0879, abs=5e-5)
    assert zeros[2] == pytest.approx(-5.5206, abs=5e-5)
    with pytest.raises(ValueError):
        airy_zeros(0)


def test_airy_density_normalization_and_mean():
    mass, _ = integrate.quad(airy_area_density, 1e-6, 6.0, limit=200)
    assert mass == pytest.approx(1.0, abs=1e-8)
    mean, _ = integrate.quad(lambda x: x * airy_area_density(x), 1e-6, 6.0, limit=200)
    assert mean == pytest.approx(math.sqrt(math.pi / 8), abs=1e-8)
    with pytest.raises(ValueError):
        airy_area_density(0.0)


def test_descent_sum_moments_match_exhaustive():
    for n in range(2, 6):
        total = (n + 1) ** n
        census = Counter(descents(f) for f in all_functions(n, n + 1))
        mean = Fraction(sum(d * c for d, c in census.items()), total)
        second = Fraction(sum(d * d * c for d, c in census.items()), total)
        var = second - mean * mean
        got_mean, got_var = descent_sum_moments(n)
        assert got_mean == pytest.approx(float(mean), abs=1e-12)
        assert got_var == pytest.approx(float(var), abs=1e-12)
    with pytest.raises(ValueError):
        descent_sum_moments(1)


def test_elementary_laws():
    assert poisson_pmf(1.0, 0) == pytest.approx(math.exp(-1))
    assert poisson_pmf(2.0, -1) == 0.0
    assert sum(poisson_pmf(1.0, j) for j in range(40)) == pytest.approx(1.0)
    assert gaussian_cdf(0.0) == pytest.approx(0.5)
    assert gaussian_cdf(1.96) == pytest.approx(0.975, abs=1e-3)
    with pytest.raises(ValueError):
        poisson_pmf(0.0, 1)


def test_distribution_handles():
    borel = distribution_handle("borel")
    assert borel.kind == "pmf"
    assert borel.evaluate(1) == pytest.approx(math.exp(-1))
    maxwell = distribution_handle("maxwell", x=0.5)
    assert maxwell.parameters == (("x", 0.5),)
    assert maxwell.evaluate(10.0) == pytest.approx(1.0, abs=1e-8)
    for name in ("excursion-max", "bridge-max", "airy-area", "poisson", "gaussian"):
        handle = distribution_handle(name)
        assert handle.name == name
    with pytest.raises(ValueError):
        distribution_handle("cauchy")
