"""Laplace distribution arithmetic and the seeded random number generator.

The Laplace distribution with location mu and scale b has density

                      1       -|r - mu|
            f(r) = ------ exp ----------,
                    2 b           b

and is the only noise distribution used anywhere in this package: a count
released with privacy budget epsilon is distributed Lap(mu, b = 1/epsilon).

Sampling uses the inverse-CDF transform driven by a SplitMix64 generator.
SplitMix64 is a counter-based mixer, so the k-th output is a pure function
of (seed, k); the scalar and vectorized paths below produce bit-identical
64-bit streams, which keeps every seeded artifact reproducible across runs
and platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


@dataclass(frozen=True)
class PrivacyBudget:
    """A validated privacy budget epsilon (unitless, strictly positive)."""

    epsilon: float

    def __post_init__(self):
        eps = self.epsilon
        if not isinstance(eps, (int, float)) or isinstance(eps, bool):
            raise ValueError(f"epsilon must be a real number, got {eps!r}")
        eps = float(eps)
        if not math.isfinite(eps) or eps <= 0.0:
            raise ValueError(f"epsilon must be finite and > 0, got {eps!r}")
        object.__setattr__(self, "epsilon", eps)

    @property
    def scale(self) -> float:
        """Laplace scale b = 1/epsilon for a sensitivity-1 count query."""
        return 1.0 / self.epsilon


@dataclass(frozen=True)
class LaplaceDistribution:
    """Laplace distribution with location ``mu`` (count units) and scale ``b``."""

    mu: float
    b: float

    def __post_init__(self):
        if not math.isfinite(self.mu):
            raise ValueError(f"location mu must be finite, got {self.mu!r}")
        if not math.isfinite(self.b) or self.b <= 0.0:
            raise ValueError(f"scale b must be finite and > 0, got {self.b!r}")
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "b", float(self.b))

    @classmethod
    def for_budget(cls, mu: float, budget: PrivacyBudget) -> "LaplaceDistribution":
        return cls(mu=mu, b=budget.scale)


def _mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * _MIX1 & _MASK64
    z = (z ^ (z >> 27)) * _MIX2 & _MASK64
    return z ^ (z >> 31)


class SeededRng:
    """SplitMix64 stream. Identical seed => identical outputs, everywhere.

    One instance must not be advanced from two concurrent contexts; callers
    that need parallel sampling create independently seeded instances.
    """

    def __init__(self, seed: int):
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ValueError(f"seed must be an integer, got {seed!r}")
        if not 0 <= seed <= _MASK64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {seed!r}")
        self.seed = seed
        self._state = seed

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def next_u64_array(self, n: int) -> np.ndarray:
        """n outputs at once; bit-identical to n calls of next_u64()."""
        counters = np.arange(1, n + 1, dtype=np.uint64) * np.uint64(_GOLDEN)
        z = counters + np.uint64(self._state)
        self._state = (self._state + n * _GOLDEN) & _MASK64
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        return z ^ (z >> np.uint64(31))

    def next_uniform(self) -> float:
        """Uniform on the open interval (0, 1); endpoints unreachable.

        Uses 52 high bits as (k + 0.5) * 2**-52, which is exact in binary64
        and keeps log(1 - 2|u - 0.5|) away from log(0) by construction.
        """
        return ((self.next_u64() >> 12) + 0.5) * 2.0**-52

    def next_uniform_array(self, n: int) -> np.ndarray:
        bits = self.next_u64_array(n) >> np.uint64(12)
        return (bits.astype(np.float64) + 0.5) * 2.0**-52


def laplace_pdf(d: LaplaceDistribution, r: float) -> float:
    """Density of ``d`` at ``r``: (1/(2b)) * exp(-|r - mu|/b)."""
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r!r}")
    return math.exp(-abs(r - d.mu) / d.b) / (2.0 * d.b)


def laplace_cdf(d: LaplaceDistribution, r: float) -> float:
    """P[X <= r] for X ~ d. Exactly 0.5 at r = mu."""
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r!r}")
    z = (r - d.mu) / d.b
    if z < 0.0:
        return 0.5 * math.exp(z)
    return 1.0 - 0.5 * math.exp(-z)


def laplace_sf(d: LaplaceDistribution, r: float) -> float:
    """P[X > r], the survival function; 1 - laplace_cdf without cancellation.

    Computing the tail directly keeps the symmetric-prior identity
    sf(t; mu) + sf(t; mu + 1) == 1 exact in floating point when t sits
    midway between the two locations.
    """
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r!r}")
    z = (r - d.mu) / d.b
    if z < 0.0:
        return 1.0 - 0.5 * math.exp(z)
    return 0.5 * math.exp(-z)


def _inverse_cdf_transform(mu: float, b: float, u01: float) -> float:
    # u01 is uniform on (0,1); centered u on (-0.5, 0.5), endpoints excluded.
    u = u01 - 0.5
    if u == 0.0:
        return mu
    return mu - b * math.copysign(1.0, u) * math.log(1.0 - 2.0 * abs(u))


def laplace_sample(d: LaplaceDistribution, rng: SeededRng) -> float:
    """One draw from ``d`` via the inverse-CDF transform, advancing ``rng``."""
    return _inverse_cdf_transform(d.mu, d.b, rng.next_uniform())


def laplace_sample_array(d: LaplaceDistribution, rng: SeededRng, n: int) -> np.ndarray:
    """n draws at once. Same uniforms as n scalar calls; the log/sign math is
    evaluated with numpy, so the floats may differ from the scalar path in the
    last ulp. Use the scalar path wherever byte-level reproducibility of the
    drawn values is part of the contract."""
    u = rng.next_uniform_array(n) - 0.5
    out = d.mu - d.b * np.sign(u) * np.log1p(-2.0 * np.abs(u))
    return np.where(u == 0.0, d.mu, out)
