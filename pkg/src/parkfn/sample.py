"""Seeded random generation of uniform functions and parking functions.

Uniformity over parking functions is exact: draw f uniform on [1, n+1]^n and
apply the unique cyclic shift (Pollak / cycle lemma) that lands in PF_n.
Streams are counter-based (Philox) so results are bit-reproducible and
independent of worker count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import ParkingFunction, PrefSequence

_MASK64 = (1 << 64) - 1


@dataclass
class RngStream:
    """A deterministic random stream keyed by (seed, stream_index).

    Identical (seed, stream_index) yields an identical value sequence across
    runs and platforms (Philox is a fixed, platform-independent generator).
    """

    seed: int
    stream_index: int = 0
    _gen: np.random.Generator = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.stream_index < 0:
            raise ValueError("stream_index must be nonnegative")
        key = (self.seed & _MASK64) << 64 | (self.stream_index & _MASK64)
        self._gen = np.random.Generator(np.random.Philox(key=key))

    def integers(self, low: int, high: int, size=None):
        """Uniform integers on the inclusive range [low, high]."""
        return self._gen.integers(low, high + 1, size=size)


def split_stream(seed: int, index: int) -> RngStream:
    """Independent stream for sample `index` of an experiment."""
    return RngStream(seed=seed, stream_index=index)


def sample_uniform_function(n: int, m: int, rng: RngStream) -> PrefSequence:
    """Each coordinate independent uniform on [1, m]."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    values = rng.integers(1, m, size=n)
    return PrefSequence(values=tuple(int(v) for v in values), m=m)


def find_valid_shift(values: Sequence[int], n: int | None = None) -> int:
    """The unique k in [0, n] such that values +_{n+1} k(1,...,1) is in PF_n.

    Computed in O(n) from value counts: with steps c_j - 1 summing to -1
    around the cycle, the valid rotation starts just after the first
    position achieving the minimum partial sum.
    """
    vals = values.values if isinstance(values, PrefSequence) else values
    if n is None:
        n = len(vals)
    mod = n + 1
    counts = [0] * (mod + 1)
    for v in vals:
        counts[v] += 1
    running = 0
    best = 1
    best_j = 0
    for j in range(1, mod + 1):
        running += counts[j] - 1
        if best_j == 0 or running < best:
            best = running
            best_j = j
    return (mod - best_j) % mod


def shift_sequence(values: Sequence[int], k: int, n: int | None = None) -> tuple[int, ...]:
    """Add k(1,...,1) mod n+1, representatives in [1, n+1]."""
    vals = tuple(values.values if isinstance(values, PrefSequence) else values)
    if n is None:
        n = len(vals)
    mod = n + 1
    return tuple((v + k - 1) % mod + 1 for v in vals)


def sample_parking_function(n: int, rng: RngStream) -> ParkingFunction:
    """Exactly uniform on PF_n via the shift map."""
    values = _sample_pf_array(n, rng)
    return ParkingFunction._trusted(tuple(int(v) for v in values))


def _sample_pf_array(n: int, rng: RngStream) -> np.ndarray:
    # Vectorized draw + shift; hot path for the experiment harness.
    if n < 1:
        raise ValueError("n must be >= 1")
    mod = n + 1
    values = np.asarray(rng.integers(1, mod, size=n))
    counts = np.bincount(values, minlength=mod + 1)
    partial = np.cumsum(counts[1:] - 1)
    j_star = int(np.argmin(partial)) + 1  # argmin takes the first minimum
    k = (mod - j_star) % mod
    return (values + k - 1) % mod + 1
