"""Central-model Laplace mechanism for binary count queries.

A curator holds the raw answers and releases the count of sensitive
responses plus Laplace noise of scale 1/epsilon. The two neighboring
databases of interest differ only in whether the subject's own sensitive
answer is present, so the released value is a draw from Lap(mu, 1/epsilon)
with mu = true_count_without or mu = true_count_without + 1.

Released values are never post-processed: no clamping, no rounding, so
outputs can be fractional or negative.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .distributions import (
    LaplaceDistribution,
    PrivacyBudget,
    SeededRng,
    laplace_sample,
)


class Branch(enum.Enum):
    """Which neighboring database the release is drawn from."""

    WITHOUT_SUBJECT = "without_subject"
    WITH_SUBJECT = "with_subject"


@dataclass(frozen=True)
class CountQuery:
    """Count of sensitive responses among the *other* respondents.

    Sensitivity is pinned to 1: adding the subject's sensitive answer moves
    the true count by exactly one. The field exists so that a future query
    type with a different sensitivity fails loudly instead of silently.
    """

    true_count_without: int
    sensitivity: int = 1

    def __post_init__(self):
        if not isinstance(self.true_count_without, int) or self.true_count_without < 0:
            raise ValueError(
                f"true_count_without must be a nonnegative integer, got {self.true_count_without!r}"
            )
        if self.sensitivity != 1:
            raise ValueError("count queries have sensitivity 1")

    @property
    def true_count_with(self) -> int:
        return self.true_count_without + 1

    def mu(self, branch: Branch) -> float:
        if branch is Branch.WITH_SUBJECT:
            return float(self.true_count_with)
        return float(self.true_count_without)


@dataclass(frozen=True)
class MechanismOutput:
    value: float
    epsilon: PrivacyBudget
    branch: Branch

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"release value must be finite, got {self.value!r}")


def release_count(
    q: CountQuery, branch: Branch, eps: PrivacyBudget, rng: SeededRng
) -> MechanismOutput:
    """One noisy release of the count under the given branch and budget."""
    dist = LaplaceDistribution.for_budget(q.mu(branch), eps)
    return MechanismOutput(value=laplace_sample(dist, rng), epsilon=eps, branch=branch)


def dp_ratio_check(
    eps: PrivacyBudget, mu0: float, mu1: float, points: Sequence[float]
) -> bool:
    """Check the epsilon-DP density-ratio bound at every point.

    True iff pdf(r; mu1, 1/eps) / pdf(r; mu0, 1/eps) lies in
    [e^-eps, e^eps] for all r in points, with 1e-9 relative slack on the
    bound. The locations must be neighbors: |mu0 - mu1| <= 1.
    """
    if abs(mu0 - mu1) > 1.0:
        raise ValueError(
            f"|mu0 - mu1| = {abs(mu0 - mu1)!r} exceeds the count-query sensitivity 1"
        )
    e = eps.epsilon
    bound = e + math.log1p(1e-9)
    for r in points:
        if not math.isfinite(r):
            raise ValueError(f"check points must be finite, got {r!r}")
        # log of pdf(r; mu1)/pdf(r; mu0); the 1/(2b) factors cancel, so this
        # form cannot underflow at far-out points.
        log_ratio = e * (abs(r - mu0) - abs(r - mu1))
        if abs(log_ratio) > bound:
            return False
    return True
