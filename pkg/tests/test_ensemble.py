"""Experiment harness, distances, and exact ensemble comparisons."""

import json
import math
from collections import Counter

import pytest

from parkfn import (
    Chain,
    ChainPoset,
    ExperimentConfig,
    Histogram,
    exact_equidistribution,
    exhaustive_histogram,
    joint_coordinate_bound_check,
    ks_distance_to_limit,
    run_experiment,
    tv_distance,
    weak_peak_check,
)
from parkfn.enumeration import count_pf, enumerate_pf
from parkfn.ensemble import STATISTICS
from parkfn.stats import (
    descents,
    inversions,
    lucky,
    max_discrepancy,
    ones,
    repeats,
    scaled_area,
)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(n=0, count=1, seed=0)
    with pytest.raises(ValueError):
        ExperimentConfig(n=3, count=1, seed=0, ensemble="permutations")
    with pytest.raises(ValueError):
        ExperimentConfig(n=3, count=1, seed=0, statistic="entropy")
    # longest-run is valid even though it lives outside the registry
    ExperimentConfig(n=3, count=1, seed=0, statistic="longest-run")


def test_run_experiment_deterministic_and_total():
    config = ExperimentConfig(n=12, count=400, seed=77, statistic="lucky")
    h1 = run_experiment(config)
    h2 = run_experiment(config)
    assert h1.bins == h2.bins
    assert h1.total == 400
    assert h1.summaries["mean"] == pytest.approx(
        sum(v * c for v, c in h1.bins.items()) / 400
    )


def test_run_experiment_worker_hint_is_inert():
    base = run_experiment(ExperimentConfig(n=8, count=100, seed=3, statistic="first"))
    hinted = run_experiment(
        ExperimentConfig(n=8, count=100, seed=3, statistic="first", workers=8)
    )
    assert base.bins == hinted.bins


def test_registry_statistics_match_reference_functions():
    reference = {
        "first": lambda v: v[0],
        "lucky": lucky,
        "repeats": repeats,
        "ones": ones,
        "descents": descents,
        "inversions": inversions,
        "max-discrepancy": max_discrepancy,
        "scaled-area": scaled_area,
    }
    for n in range(1, 6):
        for pf in enumerate_pf(n):
            for name, ref in reference.items():
                assert STATISTICS[name](pf, n, n) == ref(pf)


def test_exhaustive_histogram_area():
    h = exhaustive_histogram(3, "area")
    assert h.count == "exhaustive"
    assert h.total == count_pf(3) == 16
    # area census for n = 3: inconvenience 0..3
    assert h.bins == {0: 6, 1: 6, 2: 3, 3: 1}


def test_exhaustive_histogram_kmax_matches_law():
    from parkfn import k_pi_law

    h = exhaustive_histogram(4, "kmax")
    for k, count in h.bins.items():
        assert k_pi_law(4, k) * count_pf(4) == count


def test_histogram_json_schema():
    h = run_experiment(ExperimentConfig(n=5, count=50, seed=1, statistic="species"))
    payload = h.to_json_dict()
    assert payload["schema_version"] == 1
    assert payload["n"] == 5 and payload["count"] == 50
    assert sum(row["count"] for row in payload["bins"]) == 50
    json.dumps(payload)  # must be serializable as-is


def test_tv_distance():
    p = {1: 0.5, 2: 0.5}
    q = {1: 0.5, 3: 0.5}
    assert tv_distance(p, q) == pytest.approx(0.5)
    assert tv_distance(p, p) == 0.0
    with pytest.raises(ValueError):
        tv_distance(p, {})


def test_ks_distance_to_limit():
    h = Histogram(n=1, statistic="x", ensemble="pf", seed=0, count=4,
                  bins={0.0: 1, 1.0: 1, 2.0: 1, 3.0: 1})
    # against U(0, 4): empirical CDF at 0 is 0.25 vs 0, the worst gap
    assert ks_distance_to_limit(h, lambda t: t / 4) == pytest.approx(0.25)


def test_equidistribution_positive_features():
    for n in range(2, 6):
        for feature in ("descent-pattern", "equality-pattern",
                        "weak-descent-pattern", "species", "inversions"):
            report = exact_equidistribution(n, feature)
            assert report.equal, (feature, n, report.witness)
    for relation in ("<", "<=", ">", ">="):
        assert exact_equidistribution(4, "longest-run", relation=relation).equal


def test_equidistribution_chain_posets():
    poset = ChainPoset((Chain((1, 3), "<"), Chain((2, 4), ">=")))
    assert exact_equidistribution(4, "chain-poset", poset=poset).equal
    poset = ChainPoset((Chain((2, 3, 5), "<="),))
    assert exact_equidistribution(5, "chain-poset", poset=poset).equal
    with pytest.raises(ValueError):
        exact_equidistribution(4, "chain-poset")


def test_equidistribution_negative_controls():
    assert not exact_equidistribution(3, "strict-peak").equal
    assert not exact_equidistribution(3, "mixed-chain").equal
    assert not exact_equidistribution(2, "forced-gap").equal
    assert not exact_equidistribution(5, "non-disjoint-chain").equal
    with pytest.raises(ValueError):
        exact_equidistribution(3, "palindrome")


def test_weak_peak_check():
    for n in range(3, 6):
        for i in range(2, n):
            report = weak_peak_check(n, i)
            assert report.equal
            assert report.f_count == (n + 1) * report.pf_count
    with pytest.raises(ValueError):
        weak_peak_check(4, 1)


def test_joint_coordinate_bound():
    for n in (4, 5):
        for k in (1, 2):
            report = joint_coordinate_bound_check(n, k)
            assert report.holds
            assert 0 <= report.max_difference <= report.bound
            assert report.bound == pytest.approx(
                2 * k * math.sqrt(math.log(n) / n) + k * (k - 1) / n
            )
    with pytest.raises(ValueError):
        joint_coordinate_bound_check(4, 0)


def test_first_coordinate_marginal_is_exact():
    # exhaustive first-coordinate histogram equals the closed-form census
    from parkfn import count_first

    h = exhaustive_histogram(5, "first")
    assert h.bins == {k: count_first(5, k) for k in range(1, 6)}
