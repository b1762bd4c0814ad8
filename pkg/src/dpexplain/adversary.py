"""Adversary inference over Laplace-mechanism releases.

Models an observer who sees one noisy count r and guesses whether the
subject's sensitive answer is in the data. With prior belief P_no that it
is, Bayes' rule gives

    posterior_no(r) = f_with(r) P_no / (f_with(r) P_no + f_without(r) (1 - P_no)),

where f_with / f_without are the Laplace densities centered at
mu_without + 1 and mu_without. The posterior crosses 1/2 at a single
release value

    r_threshold = (ln(1 - P_no) - ln(P_no)) / (2 eps) + midpoint,

with midpoint = mu_without + 1/2, provided the prior is not too extreme:
max{(1 - P_no)/P_no, P_no/(1 - P_no)} <= e^eps. Outside that range the
posterior favors one answer for every possible output and no threshold
exists; that condition is surfaced as ExtremePriorError rather than being
clamped, because odds pinned silently to 0 or 100 would misrepresent the
guarantee.

The odds pair shown to end users is the pair of exceedance probabilities
P[r > r_threshold] under each branch, scaled to a display denominator
(x out of 100, y out of 100). A release exactly at the threshold counts as
"not NO": the conclusion requires strictly exceeding the threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import (
    LaplaceDistribution,
    PrivacyBudget,
    SeededRng,
    laplace_sf,
)

#: Relative slack applied when evaluating the prior-validity condition.
VALIDITY_SLACK = 1e-12


class ExtremePriorError(ValueError):
    """The prior's log-odds exceed epsilon: no release can flip the guess."""

    def __init__(self, prior_no: float, epsilon: float):
        self.prior_no = prior_no
        self.epsilon = epsilon
        odds = max((1.0 - prior_no) / prior_no, prior_no / (1.0 - prior_no))
        super().__init__(
            f"prior_no={prior_no} is too extreme for epsilon={epsilon}: "
            f"max{{(1-P)/P, P/(1-P)}} = {odds:.6g} > e^eps = {math.exp(epsilon):.6g}, "
            "so the adversary reaches the same conclusion for every possible output"
        )


@dataclass(frozen=True)
class AdversaryModel:
    """Prior belief plus the two branch locations it discriminates between."""

    prior_no: float
    epsilon: PrivacyBudget
    mu_without: float = 0.0

    def __post_init__(self):
        if not (isinstance(self.prior_no, (int, float)) and 0.0 < self.prior_no < 1.0):
            raise ValueError(f"prior_no must lie strictly in (0, 1), got {self.prior_no!r}")
        if not math.isfinite(self.mu_without):
            raise ValueError(f"mu_without must be finite, got {self.mu_without!r}")
        object.__setattr__(self, "prior_no", float(self.prior_no))
        object.__setattr__(self, "mu_without", float(self.mu_without))

    @property
    def mu_with(self) -> float:
        return self.mu_without + 1.0

    @property
    def log_prior_odds_against(self) -> float:
        """ln((1 - P_no)/P_no); zero for the symmetric prior."""
        return math.log(1.0 - self.prior_no) - math.log(self.prior_no)

    def prior_is_valid(self) -> bool:
        return abs(self.log_prior_odds_against) <= self.epsilon.epsilon + math.log1p(
            VALIDITY_SLACK
        )


@dataclass(frozen=True)
class OddsPair:
    """Exceedance probabilities under each branch plus display integers.

    ``p_without`` is the chance the adversary concludes the sensitive answer
    is present when the subject did NOT contribute it; ``p_with`` the same
    chance when they did. ``x``/``y`` are those probabilities scaled to
    ``denominator`` and rounded half away from zero.
    """

    p_without: float
    p_with: float
    denominator: int
    x: int
    y: int


def round_half_away_from_zero(v: float) -> int:
    """Display rounding: 47.5 -> 48, -47.5 -> -48 (unlike banker's round)."""
    return int(math.floor(v + 0.5)) if v >= 0.0 else -int(math.floor(-v + 0.5))


def decision_threshold(m: AdversaryModel) -> float:
    """Release value where the posterior is exactly indifferent.

    Shifted from the midpoint of the two branch locations by the prior's
    log-odds over 2*eps; exactly the midpoint (0.5 for the count-0 scenario)
    when prior_no = 0.5. Raises ExtremePriorError when no threshold exists.
    """
    if not m.prior_is_valid():
        raise ExtremePriorError(m.prior_no, m.epsilon.epsilon)
    midpoint = 0.5 * (m.mu_without + m.mu_with)
    shift = m.log_prior_odds_against / (2.0 * m.epsilon.epsilon)
    return midpoint + shift


def posterior_no(m: AdversaryModel, r: float) -> float:
    """Posterior probability that the subject's answer is in the data.

    Evaluated in log space so extreme eps*|r| cannot underflow the kernels.
    """
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r!r}")
    e = m.epsilon.epsilon
    a_with = -e * abs(r - m.mu_with) + math.log(m.prior_no)
    a_without = -e * abs(r - m.mu_without) + math.log(1.0 - m.prior_no)
    # 1 / (1 + exp(a_without - a_with)), guarded against overflow
    diff = a_without - a_with
    if diff > 700.0:
        return 0.0
    return 1.0 / (1.0 + math.exp(diff))


def posterior_not_no(m: AdversaryModel, r: float) -> float:
    """Complement posterior; posterior_no + posterior_not_no = 1 within 1e-12."""
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r!r}")
    e = m.epsilon.epsilon
    a_with = -e * abs(r - m.mu_with) + math.log(m.prior_no)
    a_without = -e * abs(r - m.mu_without) + math.log(1.0 - m.prior_no)
    diff = a_with - a_without
    if diff > 700.0:
        return 0.0
    return 1.0 / (1.0 + math.exp(diff))


def compute_odds(m: AdversaryModel, denominator: int = 100) -> OddsPair:
    """Odds pair at the adversary's decision threshold.

    p_without = P[r > t | Lap(mu_without, 1/eps)] and
    p_with    = P[r > t | Lap(mu_with, 1/eps)], t = decision_threshold(m).
    The tails are taken with the survival function so that the symmetric
    prior yields p_without + p_with = 1 exactly.
    """
    if not (isinstance(denominator, int) and denominator >= 2):
        raise ValueError(f"denominator must be an integer >= 2, got {denominator!r}")
    t = decision_threshold(m)
    b = m.epsilon.scale
    p_without = laplace_sf(LaplaceDistribution(m.mu_without, b), t)
    p_with = laplace_sf(LaplaceDistribution(m.mu_with, b), t)
    return OddsPair(
        p_without=p_without,
        p_with=p_with,
        denominator=denominator,
        x=round_half_away_from_zero(p_without * denominator),
        y=round_half_away_from_zero(p_with * denominator),
    )


def monte_carlo_odds(
    m: AdversaryModel,
    trials: int,
    rng: SeededRng,
    denominator: int = 100,
) -> OddsPair:
    """Empirical odds from simulated releases; the oracle for compute_odds.

    Runs ``trials`` mechanism releases per branch and classifies each by
    posterior comparison (equivalently r > threshold). Standard error per
    estimate is at most 0.5/sqrt(trials). Single shard: the draws consume
    2*trials consecutive outputs of ``rng`` (without-branch first), which is
    part of the reproducibility contract.
    """
    if not (isinstance(trials, int) and trials >= 1):
        raise ValueError(f"trials must be a positive integer, got {trials!r}")
    t = decision_threshold(m)
    b = m.epsilon.scale

    def branch_frequency(mu: float) -> float:
        u = rng.next_uniform_array(trials) - 0.5
        draws = mu - b * np.sign(u) * np.log1p(-2.0 * np.abs(u))
        return float(np.count_nonzero(draws > t)) / trials

    p_without = branch_frequency(m.mu_without)
    p_with = branch_frequency(m.mu_with)
    return OddsPair(
        p_without=p_without,
        p_with=p_with,
        denominator=denominator,
        x=round_half_away_from_zero(p_without * denominator),
        y=round_half_away_from_zero(p_with * denominator),
    )


def outcome_threshold_odds(
    eps: PrivacyBudget, mu: float, outcome_threshold: float
) -> float:
    """P[release > outcome_threshold] for a release centered at mu.

    The utility-facing variant of the odds computation: the chance that a
    downstream trigger (say, a count high enough to require action) fires.
    """
    return laplace_sf(LaplaceDistribution(mu, eps.scale), outcome_threshold)
