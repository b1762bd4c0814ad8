import math

import numpy as np
import pytest
from scipy import stats

from dpexplain.distributions import PrivacyBudget, SeededRng
from dpexplain.mechanism import (
    Branch,
    CountQuery,
    MechanismOutput,
    dp_ratio_check,
    release_count,
)

from helpers import ks_critical_value


class TestCountQuery:
    def test_with_subject_adds_one(self):
        q = CountQuery(true_count_without=3)
        assert q.true_count_with == 4
        assert q.mu(Branch.WITHOUT_SUBJECT) == 3.0
        assert q.mu(Branch.WITH_SUBJECT) == 4.0

    def test_rejects_negative_count(self):
        with pytest.raises(ValueError):
            CountQuery(true_count_without=-1)

    def test_rejects_other_sensitivities(self):
        with pytest.raises(ValueError):
            CountQuery(true_count_without=0, sensitivity=2)

    def test_rejects_nonfinite_output(self):
        with pytest.raises(ValueError):
            MechanismOutput(math.inf, PrivacyBudget(1), Branch.WITH_SUBJECT)


class TestReleaseCount:
    def test_vanishing_noise_at_huge_budget(self):
        q = CountQuery(true_count_without=0)
        rng = SeededRng(123)
        out = release_count(q, Branch.WITHOUT_SUBJECT, PrivacyBudget(1e9), rng)
        assert abs(out.value) < 1e-6

    def test_deterministic_given_seed(self):
        q = CountQuery(true_count_without=0)
        values = []
        for _ in range(2):
            rng = SeededRng(20220131)
            values.append(release_count(q, Branch.WITH_SUBJECT, PrivacyBudget(0.5), rng).value)
        assert values[0] == values[1]

    def test_releases_match_target_distribution(self):
        # 10^6 releases at (mu=1, eps=2) against Lap(1, 0.5)
        q = CountQuery(true_count_without=0)
        rng = SeededRng(4242)
        eps = PrivacyBudget(2)
        n = 1_000_000
        draws = np.fromiter(
            (release_count(q, Branch.WITH_SUBJECT, eps, rng).value for _ in range(n)),
            dtype=float,
            count=n,
        )
        result = stats.kstest(draws, stats.laplace(loc=1.0, scale=0.5).cdf)
        assert result.statistic < ks_critical_value(n, alpha=0.001)

    def test_releases_are_unclamped(self):
        # no post-processing: negatives and fractional values must occur
        q = CountQuery(true_count_without=0)
        rng = SeededRng(7)
        eps = PrivacyBudget(0.1)
        values = [
            release_count(q, Branch.WITHOUT_SUBJECT, eps, rng).value
            for _ in range(100_000)
        ]
        assert any(v < 0 for v in values)
        assert any(v != math.floor(v) for v in values)


class TestDpRatioCheck:
    def test_holds_on_integer_sweep(self):
        points = list(range(-5, 6))
        assert dp_ratio_check(PrivacyBudget(2), 0.0, 1.0, points) is True

    def test_rejects_non_neighboring_locations(self):
        with pytest.raises(ValueError):
            dp_ratio_check(PrivacyBudget(2), 0.0, 3.0, [0.0])

    def test_holds_on_dense_random_sweep(self):
        rnd = np.random.default_rng(11)
        points = rnd.uniform(-50, 50, size=10_000)
        assert dp_ratio_check(PrivacyBudget(0.1), 0.0, 1.0, points) is True

    def test_rejects_nonfinite_points(self):
        with pytest.raises(ValueError):
            dp_ratio_check(PrivacyBudget(1), 0.0, 1.0, [0.0, math.nan])

    def test_density_ratio_bound_everywhere(self):
        # the epsilon-DP guarantee specialized to Laplace, swept densely
        from dpexplain.distributions import LaplaceDistribution, laplace_pdf

        for eps in (0.1, 0.5, 2.0, 4.0):
            b = 1.0 / eps
            d0 = LaplaceDistribution(0.0, b)
            d1 = LaplaceDistribution(1.0, b)
            for r in np.linspace(-20, 21, 2001):
                ratio = laplace_pdf(d1, float(r)) / laplace_pdf(d0, float(r))
                assert math.exp(-eps) * (1 - 1e-12) <= ratio <= math.exp(eps) * (1 + 1e-12)
