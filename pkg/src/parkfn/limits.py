"""Numerical evaluation of the limit laws: Borel, Maxwell coordinate law,
excursion maximum, Airy area density, and related special values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import mpmath
import numpy as np
from scipy import integrate, special


# --- Borel ----------------------------------------------------------------

def borel_pmf(j: int) -> float:
    """P(X = j) = e^{-j} j^{j-1} / j!, evaluated in log space."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return math.exp(-j + (j - 1) * math.log(j) - math.lgamma(j + 1))


def borel_tail(j: int) -> float:
    """Q(j) = P(X >= j).  Computed as 1 minus the head sum: the raw tail
    decays like j^{-1/2}, far too slowly to truncate, but the total mass is
    exactly 1."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return 1.0 - sum(borel_pmf(i) for i in range(1, j))


def borel_identity(x: float, terms: int = 100_000) -> float:
    """sum_{j>=1} e^{-xj}(xj)^{j-1}/j! for 0 < x <= 1; equals 1 identically.

    Direct summation plus a Lerch-transcendent tail correction: the terms
    behave like r^j/(x sqrt(2 pi) j^{3/2}) with r = x e^{1-x}, so the tail
    past J is r^{J+1} [Phi(r,3/2,J+1) - Phi(r,5/2,J+1)/12 + ...] up to
    O(J^{-7/2}) Stirling error.
    """
    if not 0 < x <= 1:
        raise ValueError("x must be in (0, 1]")
    j = np.arange(1, terms + 1, dtype=float)
    logs = -x * j + (j - 1) * np.log(x * j) - special.gammaln(j + 1)
    head = float(np.exp(logs).sum())
    r = x * math.exp(1 - x)
    J = terms
    tail = float(
        r ** (J + 1)
        / (x * math.sqrt(2 * math.pi))
        * (
            mpmath.lerchphi(r, 1.5, J + 1)
            - mpmath.lerchphi(r, 2.5, J + 1) / 12
            + mpmath.lerchphi(r, 3.5, J + 1) / 288
        )
    )
    return head + tail


def first_coordinate_limit(n: int, j: int, side: str = "low") -> float:
    """Large-n coordinate asymptotics: P(pi_1 = j) ~ (1 + Q(j))/n at the low
    end, P(pi_1 = n - j) ~ (1 - Q(j + 2))/n at the high end."""
    if side == "low":
        if j < 1:
            raise ValueError("low side needs j >= 1")
        return (1.0 + borel_tail(j)) / n
    if side == "high":
        return (1.0 - borel_tail(j + 2)) / n
    raise ValueError(f"unknown side {side!r}")


# --- Maxwell coordinate-count law ----------------------------------------

def coordinate_count_density(x: float, y: float) -> float:
    """Density of the limit of (#{i : pi_i < nx} - nx)/sqrt(n): a chi-3
    (Maxwell) law with scale sigma^2 = x(1-x)."""
    if not 0 < x < 1:
        raise ValueError("x must be in (0, 1)")
    if y < 0:
        return 0.0
    sigma2 = x * (1 - x)
    return math.sqrt(2 / math.pi) * y * y * math.exp(-y * y / (2 * sigma2)) / sigma2**1.5


def coordinate_count_cdf(x: float, t: float) -> float:
    """CDF of the Maxwell coordinate-count limit, by adaptive quadrature."""
    if t <= 0:
        return 0.0
    value, _err = integrate.quad(lambda y: coordinate_count_density(x, y), 0.0, t)
    return value


# --- excursion / bridge maximum ------------------------------------------

def max_discrepancy_cdf(t: float) -> float:
    """P(M <= t) = sum_k (1 - 4 k^2 t^2) e^{-2 k^2 t^2} over all integers k."""
    if t <= 0:
        return 0.0
    total = 1.0  # k = 0 term
    k = 1
    while True:
        e = math.exp(-2 * k * k * t * t)
        term = (1 - 4 * k * k * t * t) * e
        total += 2 * term
        if e * (1 + 4 * k * k * t * t) < 1e-14:
            break
        k += 1
    return total


def bridge_max_cdf(t: float) -> float:
    """P(M_1 <= t) = 1 - e^{-2 t^2}: the all-functions (bridge) analog."""
    if t <= 0:
        return 0.0
    return 1.0 - math.exp(-2 * t * t)


def excursion_max_mean() -> float:
    """E(M) = integral of the upper tail; equals sqrt(pi/2)."""
    value, _err = integrate.quad(lambda t: 1.0 - max_discrepancy_cdf(t), 0.0, 10.0)
    return value


def xi_moment(s: float) -> float:
    """E(M^s) = 2^{-s/2} s(s-1) Gamma(s/2) zeta(s) for 1 < s < 2."""
    if not 1 < s < 2:
        raise ValueError("s must be in (1, 2)")
    return 2 ** (-s / 2) * s * (s - 1) * special.gamma(s / 2) * special.zeta(s)


# --- Airy area law --------------------------------------------------------

@lru_cache(maxsize=None)
def airy_zeros(count: int) -> tuple[float, ...]:
    """First `count` zeros of Ai(x) (negative reals, decreasing)."""
    if not 1 <= count <= 50:
        raise ValueError("count must be in [1, 50]")
    return tuple(float(z) for z in special.ai_zeros(count)[0])


def airy_area_density(x: float, rel_tol: float = 1e-14) -> float:
    """Density of the Airy area law:
    f(x) = (2 sqrt(6)/x^{10/3}) sum_k e^{-b_k/x^2} b_k^{2/3} U(-5/6, 4/3, b_k/x^2)
    with b_k = -2 a_k^3 / 27 over Airy zeros a_k."""
    if x <= 0:
        raise ValueError("x must be > 0")
    total = 0.0
    k = 1
    while True:
        a_k = airy_zeros(min(50, max(10, k)))[k - 1]
        b_k = -2 * a_k**3 / 27
        z = b_k / (x * x)
        term = math.exp(-z) * b_k ** (2 / 3) * float(special.hyperu(-5 / 6, 4 / 3, z))
        total += term
        if k >= 3 and abs(term) < rel_tol * abs(total):
            break
        if k >= 50:
            break
        k += 1
    return 2 * math.sqrt(6) / x ** (10 / 3) * total


# --- descent-sum CLT normalization ----------------------------------------

def descent_sum_moments(n: int) -> tuple[float, float]:
    """Mean and variance of the total descent count S_{n-1}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    mean = (n - 1) * (0.5 - 1 / (2 * (n + 1)))
    variance = (n + 1) / 12 * (1 - 1 / (n + 1) ** 2)
    return mean, variance


# --- elementary reference laws -------------------------------------------

def poisson_pmf(lam: float, j: int) -> float:
    """Poisson pmf in log space."""
    if lam <= 0:
        raise ValueError("lambda must be > 0")
    if j < 0:
        return 0.0
    return math.exp(-lam + j * math.log(lam) - math.lgamma(j + 1))


def gaussian_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function."""
    return 0.5 * math.erfc(-x / math.sqrt(2))


# --- tabulation handles ---------------------------------------------------

@dataclass(frozen=True)
class DistributionHandle:
    """A named 1-argument evaluator for the CLI `dist` subcommand."""

    name: str
    parameters: tuple[tuple[str, float], ...]
    evaluate: Callable[[float], float]
    kind: str  # "pmf" or "cdf" or "pdf"


def distribution_handle(name: str, **params: float) -> DistributionHandle:
    """Look up a distribution by name: borel, maxwell(x), excursion-max,
    bridge-max, airy-area, poisson(lam), gaussian."""
    if name == "borel":
        return DistributionHandle(name, (), lambda j: borel_pmf(int(j)), "pmf")
    if name == "maxwell":
        x = params["x"]
        return DistributionHandle(
            name, (("x", x),), lambda t, _x=x: coordinate_count_cdf(_x, t), "cdf"
        )
    if name == "excursion-max":
        return DistributionHandle(name, (), max_discrepancy_cdf, "cdf")
    if name == "bridge-max":
        return DistributionHandle(name, (), bridge_max_cdf, "cdf")
    if name == "airy-area":
        return DistributionHandle(name, (), airy_area_density, "pdf")
    if name == "poisson":
        lam = params.get("lam", 1.0)
        return DistributionHandle(
            name, (("lam", lam),), lambda j, _l=lam: poisson_pmf(_l, int(j)), "pmf"
        )
    if name == "gaussian":
        return DistributionHandle(name, (), gaussian_cdf, "cdf")
    raise ValueError(f"unknown distribution {name!r}")
