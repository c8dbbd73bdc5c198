"""Monte Carlo experiment harness and exact ensemble-comparison checks.

The "equivalence of ensembles" engine: seeded, reproducible experiments over
uniform parking functions or uniform functions, exact equidistribution
checks between PF_n and the (n+1)-codomain ensemble, and distribution
distances (total variation, Kolmogorov-Smirnov).
"""

from __future__ import annotations

import math
import statistics as pystats
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional, Sequence

import numpy as np

from . import stats as st
from .core import is_parking_function, park, queue_profile
from .enumeration import all_functions, count_pf, enumerate_pf
from .sample import _sample_pf_array, split_stream

ENSEMBLES = ("pf", "fn", "fn1")


# --- statistics registry --------------------------------------------------

def _stat_first(values, n, m):
    return int(values[0])


def _stat_area(values, n, m):
    return n * (n + 1) // 2 - int(sum(values))


def _stat_scaled_area(values, n, m):
    return (n * n / 2 - int(sum(values))) / n**1.5


def _stat_lucky(values, n, m):
    return st.lucky(tuple(int(v) for v in values))


def _stat_repeats(values, n, m):
    v = np.asarray(values)
    return int(np.count_nonzero(v[1:] == v[:-1]))


def _stat_ones(values, n, m):
    return int(np.count_nonzero(np.asarray(values) == 1))


def _stat_descents(values, n, m):
    v = np.asarray(values)
    return int(np.count_nonzero(v[1:] < v[:-1]))


def _stat_descent_pattern(values, n, m):
    v = np.asarray(values)
    return tuple(int(b) for b in (v[1:] < v[:-1]))


def _stat_species(values, n, m):
    return st.species(tuple(int(v) for v in values), m=m)


def _stat_inversions(values, n, m):
    return st.inversions(tuple(int(v) for v in values))


def _stat_max_discrepancy(values, n, m):
    counts = np.bincount(np.asarray(values), minlength=n + 1)
    profile = np.cumsum(counts[1:]) - np.arange(1, len(counts))
    return int(profile.max(initial=0))


def _stat_scaled_max_discrepancy(values, n, m):
    return _stat_max_discrepancy(values, n, m) / math.sqrt(n)


def _stat_kmax(values, n, m):
    decomp = st.max_first_coordinate(tuple(int(v) for v in values[1:]))
    return 0 if decomp is None else decomp.k


STATISTICS: dict[str, Callable] = {
    "first": _stat_first,
    "area": _stat_area,
    "scaled-area": _stat_scaled_area,
    "lucky": _stat_lucky,
    "repeats": _stat_repeats,
    "ones": _stat_ones,
    "descents": _stat_descents,
    "descent-pattern": _stat_descent_pattern,
    "species": _stat_species,
    "inversions": _stat_inversions,
    "max-discrepancy": _stat_max_discrepancy,
    "scaled-max-discrepancy": _stat_scaled_max_discrepancy,
    "kmax": _stat_kmax,
}


def longest_run_statistic(relation: str) -> Callable:
    def fn(values, n, m):
        return st.longest_run(tuple(int(v) for v in values), relation)

    return fn


# --- experiment harness ---------------------------------------------------

@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    count: int
    seed: int
    ensemble: str = "pf"
    statistic: str = "first"
    relation: str = "<"  # used by longest-run only
    workers: int = 1  # hint; cannot change results

    def __post_init__(self) -> None:
        if self.n < 1 or self.count < 1:
            raise ValueError("n and count must be >= 1")
        if self.ensemble not in ENSEMBLES:
            raise ValueError(f"unknown ensemble {self.ensemble!r}")
        if self.statistic != "longest-run" and self.statistic not in STATISTICS:
            raise ValueError(f"unknown statistic {self.statistic!r}")


@dataclass
class Histogram:
    """Seeded-experiment output: exact integer bin counts plus scaled
    summaries of the observed values."""

    n: int
    statistic: str
    ensemble: str
    seed: Optional[int]
    count: int | str  # sample count or "exhaustive"
    bins: dict[Hashable, int] = field(default_factory=dict)
    summaries: dict[str, float] = field(default_factory=dict)

    @classmethod
    def from_values(cls, values: Sequence, **meta) -> "Histogram":
        bins: dict[Hashable, int] = {}
        for v in values:
            bins[v] = bins.get(v, 0) + 1
        hist = cls(bins=bins, **meta)
        numeric = [v for v in values if isinstance(v, (int, float))]
        if numeric:
            ordered = sorted(numeric)
            total = len(ordered)
            hist.summaries = {
                "mean": float(pystats.fmean(ordered)),
                "var": float(pystats.pvariance(ordered)) if total > 1 else 0.0,
                "q01": float(ordered[int(0.01 * (total - 1))]),
                "q50": float(ordered[int(0.50 * (total - 1))]),
                "q99": float(ordered[int(0.99 * (total - 1))]),
            }
        return hist

    @property
    def total(self) -> int:
        return sum(self.bins.values())

    def probabilities(self) -> dict[Hashable, float]:
        total = self.total
        return {k: c / total for k, c in self.bins.items()}

    def values(self) -> list:
        out = []
        for v, c in self.bins.items():
            out.extend([v] * c)
        return out

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.n,
            "statistic": self.statistic,
            "ensemble": self.ensemble,
            "seed": self.seed,
            "count": self.count,
            "bins": [
                {"value": list(v) if isinstance(v, tuple) else v, "count": c}
                for v, c in sorted(self.bins.items(), key=lambda kv: str(kv[0]))
            ],
            "summaries": self.summaries,
        }


def run_experiment(config: ExperimentConfig) -> Histogram:
    """Sample `count` functions, one stream per sample index, and histogram
    the named statistic.  Deterministic and worker-count independent."""
    if config.statistic == "longest-run":
        stat_fn = longest_run_statistic(config.relation)
    else:
        stat_fn = STATISTICS[config.statistic]
    n = config.n
    m = {"pf": n, "fn": n, "fn1": n + 1}[config.ensemble]
    values = []
    for i in range(config.count):
        rng = split_stream(config.seed, i)
        if config.ensemble == "pf":
            sample = _sample_pf_array(n, rng)
        else:
            sample = np.asarray(rng.integers(1, m, size=n))
        values.append(stat_fn(sample, n, m))
    return Histogram.from_values(
        values,
        n=n,
        statistic=config.statistic,
        ensemble=config.ensemble,
        seed=config.seed,
        count=config.count,
    )


def exhaustive_histogram(n: int, statistic: str, ensemble: str = "pf",
                         relation: str = "<", limit: int = 8) -> Histogram:
    """Exact histogram of a statistic over all of PF_n or an all-functions
    ensemble; counts are exact integers."""
    if statistic == "longest-run":
        stat_fn = longest_run_statistic(relation)
    else:
        stat_fn = STATISTICS[statistic]
    m = {"pf": n, "fn": n, "fn1": n + 1}[ensemble]
    if ensemble == "pf":
        source: Iterable = enumerate_pf(n, limit=limit)
    else:
        source = all_functions(n, m)
    bins: dict[Hashable, int] = {}
    for f in source:
        v = stat_fn(f, n, m)
        bins[v] = bins.get(v, 0) + 1
    return Histogram(
        n=n, statistic=statistic, ensemble=ensemble, seed=None, count="exhaustive", bins=bins
    )


# --- distances ------------------------------------------------------------

def tv_distance(p, q) -> float:
    """Total variation distance: half the L1 distance after normalizing."""
    p_probs = p.probabilities() if isinstance(p, Histogram) else dict(p)
    q_probs = q.probabilities() if isinstance(q, Histogram) else dict(q)
    if not p_probs or not q_probs:
        raise ValueError("empty distribution")
    support = set(p_probs) | set(q_probs)
    return 0.5 * sum(abs(p_probs.get(k, 0.0) - q_probs.get(k, 0.0)) for k in support)


def ks_distance_to_limit(histogram: Histogram, limit_cdf: Callable[[float], float]) -> float:
    """sup over the histogram support of |empirical CDF - limit CDF|."""
    items = sorted((float(v), c) for v, c in histogram.bins.items())
    total = sum(c for _v, c in items)
    running = 0
    worst = 0.0
    for v, c in items:
        running += c
        worst = max(worst, abs(running / total - limit_cdf(v)))
    return worst


# --- exact equidistribution ----------------------------------------------

@dataclass(frozen=True)
class EquidistributionReport:
    n: int
    feature: str
    equal: bool
    witness: Optional[Hashable]  # first violating feature value, if any


def _feature_fn(feature: str, relation: str = "<",
                poset: Optional[st.ChainPoset] = None,
                position: int = 2) -> Callable[[tuple[int, ...], int], Hashable]:
    """Feature evaluators shared by both ensembles.  Comparisons only depend
    on relative values, so the same callable serves PF_n and the extended
    ensemble; species is always taken with n+1 boxes."""
    if feature == "descent-pattern":
        return lambda f, n: st.descent_pattern(f, "<")
    if feature == "equality-pattern":
        return lambda f, n: st.descent_pattern(f, "=")
    if feature == "weak-descent-pattern":
        return lambda f, n: st.descent_pattern(f, "<=")
    if feature == "species":
        return lambda f, n: st.species(f, m=n + 1)
    if feature == "inversions":
        return lambda f, n: st.inversions(f)
    if feature == "longest-run":
        return lambda f, n: st.longest_run(f, relation)
    if feature == "chain-poset":
        if poset is None:
            raise ValueError("chain-poset feature needs a poset")
        return lambda f, n: st.chain_monotone(f, poset)
    # Negative controls: predicates known to distinguish the ensembles.
    if feature == "strict-peak":
        i = position
        return lambda f, n: f[i - 2] < f[i - 1] > f[i]
    if feature == "mixed-chain":
        i = position
        return lambda f, n: f[i - 2] <= f[i - 1] < f[i]
    if feature == "forced-gap":
        return lambda f, n: f[0] < f[1] - 1
    if feature == "non-disjoint-chain":
        # Chains 1<2<3 and 4<2<5 sharing position 2 (needs n >= 5).
        return lambda f, n: f[0] < f[1] < f[2] and f[3] < f[1] and f[1] < f[4]
    raise ValueError(f"unknown feature {feature!r}")


def exact_equidistribution(n: int, feature: str, relation: str = "<",
                           poset: Optional[st.ChainPoset] = None,
                           position: int = 2, limit: int = 8) -> EquidistributionReport:
    """Brute-force joint feature distribution over PF_n versus all functions
    [n] -> [n+1]; equality must hold exactly after scaling by n+1."""
    fn = _feature_fn(feature, relation=relation, poset=poset, position=position)
    pf_counts: dict[Hashable, int] = {}
    for pf in enumerate_pf(n, limit=limit):
        v = fn(pf, n)
        pf_counts[v] = pf_counts.get(v, 0) + 1
    f_counts: dict[Hashable, int] = {}
    for f in all_functions(n, n + 1):
        v = fn(f, n)
        f_counts[v] = f_counts.get(v, 0) + 1
    support = sorted(set(pf_counts) | set(f_counts), key=str)
    for v in support:
        if f_counts.get(v, 0) != (n + 1) * pf_counts.get(v, 0):
            return EquidistributionReport(n=n, feature=feature, equal=False, witness=v)
    return EquidistributionReport(n=n, feature=feature, equal=True, witness=None)


@dataclass(frozen=True)
class WeakPeakReport:
    n: int
    position: int
    equal: bool
    pf_count: int
    f_count: int


def weak_peak_check(n: int, i: int, limit: int = 8) -> WeakPeakReport:
    """Verify P(f_{i-1} < f_i >= f_{i+1}) is equal across ensembles, exactly,
    via inclusion-exclusion over two chain posets:
    #(weak peak) = #(f_{i-1} < f_i) - #(f_{i-1} < f_i < f_{i+1})."""
    if not 2 <= i <= n - 1:
        raise ValueError("peak position must be in [2, n-1]")
    p1 = st.ChainPoset((st.Chain((i - 1, i), "<"),))
    p2 = st.ChainPoset((st.Chain((i - 1, i, i + 1), "<"),))

    def census(source) -> tuple[int, int, int]:
        n1 = n2 = direct = 0
        for f in source:
            if st.chain_monotone(f, p1):
                n1 += 1
            if st.chain_monotone(f, p2):
                n2 += 1
            if f[i - 2] < f[i - 1] >= f[i]:
                direct += 1
        return n1, n2, direct

    pf1, pf2, pf_direct = census(enumerate_pf(n, limit=limit))
    f1, f2, f_direct = census(all_functions(n, n + 1))
    assert pf1 - pf2 == pf_direct and f1 - f2 == f_direct  # inclusion-exclusion sanity
    equal = f_direct == (n + 1) * pf_direct
    return WeakPeakReport(n=n, position=i, equal=equal, pf_count=pf_direct, f_count=f_direct)


# --- joint coordinate bound ----------------------------------------------

@dataclass(frozen=True)
class JointBoundReport:
    n: int
    k: int
    holds: bool
    max_difference: float
    bound: float


def joint_coordinate_bound_check(n: int, k: int, limit: int = 8) -> JointBoundReport:
    """Exact joint CDF of k coordinates of a uniform parking function versus
    the product form for uniform functions [n] -> [n], over the full grid
    x_j = i_j/n; asserts the 2k sqrt(log n / n) + k(k-1)/n bound (n >= 4)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = count_pf(n)
    # joint counts over the first k coordinates (PF_n is permutation-symmetric)
    counts = np.zeros((n,) * k, dtype=np.int64)
    for pf in enumerate_pf(n, limit=limit):
        counts[tuple(v - 1 for v in pf[:k])] += 1
    # CDF by cumulative sums along each axis
    cdf = counts.astype(np.float64)
    for axis in range(k):
        cdf = np.cumsum(cdf, axis=axis)
    cdf /= total
    axes_grid = np.arange(1, n + 1) / n
    product_cdf = axes_grid
    for _ in range(k - 1):
        product_cdf = np.multiply.outer(product_cdf, axes_grid)
    max_diff = float(np.abs(cdf - product_cdf).max())
    bound = 2 * k * math.sqrt(math.log(n) / n) + k * (k - 1) / n
    return JointBoundReport(n=n, k=k, holds=(n >= 4 and max_diff <= bound),
                            max_difference=max_diff, bound=bound)
