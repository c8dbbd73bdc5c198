"""The queue profile and its maximum.

For a parking function, y_k = #{i : pi_i <= k} - k stays nonnegative;
scaled by sqrt(n) it converges to a Brownian excursion.  Its maximum
therefore follows the excursion-maximum law, not the simpler bridge law
that unconstrained functions obey.  This script measures both
Kolmogorov-Smirnov distances on sampled data, so the parking constraint
is visible as the ordering of the two distances.
"""

import math

from parkfn import ks_distance_to_limit
from parkfn.ensemble import ExperimentConfig, run_experiment
from parkfn.limits import bridge_max_cdf, excursion_max_mean, max_discrepancy_cdf

N = 200
COUNT = 10_000
SEED = 3

hist = run_experiment(
    ExperimentConfig(n=N, count=COUNT, seed=SEED, statistic="scaled-max-discrepancy")
)
print(f"scaled maximum of the queue profile, n={N}, {COUNT} samples, seed={SEED}\n")
print(f"empirical mean {hist.summaries['mean']:.4f}   "
      f"limit E(M) = sqrt(pi/2) = {excursion_max_mean():.4f}")

ks_exc = ks_distance_to_limit(hist, max_discrepancy_cdf)
ks_bridge = ks_distance_to_limit(hist, bridge_max_cdf)
print(f"\nKS distance to the excursion-maximum law: {ks_exc:.4f}")
print(f"KS distance to the bridge law 1-e^(-2t^2): {ks_bridge:.4f}")
print("the excursion law wins decisively; the residual distance to it is "
      "the O(1/sqrt(n)) finite-size shift, visible in the mean gap of "
      f"{excursion_max_mean() - hist.summaries['mean']:.4f} "
      f"~ {1.77 / math.sqrt(N):.4f}")

print("\nCDF comparison on a coarse grid:")
values = sorted(hist.values())
print(f"{'t':>5} {'empirical':>10} {'excursion':>10} {'bridge':>8}")
for t in (0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 2.0):
    emp = sum(1 for v in values if v <= t) / COUNT
    print(f"{t:>5.1f} {emp:>10.4f} {max_discrepancy_cdf(t):>10.4f} "
          f"{bridge_max_cdf(t):>8.4f}")
