"""The first coordinate of a uniform random parking function.

The first preference is nearly uniform on [1, n], but the corners are
special: small values are overrepresented (P(pi_1 = 1) approaches 2/n)
and large values are rare (P(pi_1 = n) decays to e^{-1}/n).  This script
compares a seeded Monte Carlo experiment with the exact census and the
corner asymptotics.
"""

import math

from parkfn import count_first, count_pf, exact_mean_first
from parkfn.ensemble import ExperimentConfig, run_experiment
from parkfn.limits import first_coordinate_limit

N = 60
COUNT = 40_000
SEED = 7

hist = run_experiment(
    ExperimentConfig(n=N, count=COUNT, seed=SEED, statistic="first")
)
total_pf = count_pf(N)

print(f"first coordinate of a uniform parking function, n={N}, "
      f"{COUNT} samples, seed={SEED}")
print(f"{'j':>4} {'empirical':>10} {'exact':>10} {'limit':>10}")
for j in (1, 2, 3, N // 2, N - 2, N - 1, N):
    empirical = hist.bins.get(j, 0) / COUNT
    exact = count_first(N, j) / total_pf
    if j <= 3:
        limit = first_coordinate_limit(N, j, "low")
    elif j >= N - 2:
        limit = first_coordinate_limit(N, N - j, "high")
    else:
        limit = 1 / N
    print(f"{j:>4} {empirical:>10.5f} {exact:>10.5f} {limit:>10.5f}")

mean = hist.summaries["mean"]
print(f"\nempirical mean {mean:.4f}  exact mean {float(exact_mean_first(N)):.4f}")
print("the deficit below n/2 approaches sqrt(2*pi*n)/4 slowly:",
      f"{N / 2 - float(exact_mean_first(N)):.4f} at n={N} vs "
      f"{(2 * math.pi * N) ** 0.5 / 4:.4f} in the limit")
