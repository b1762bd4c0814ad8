import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dpexplain.adversary import (
    AdversaryModel,
    ExtremePriorError,
    compute_odds,
    decision_threshold,
    monte_carlo_odds,
    outcome_threshold_odds,
    posterior_no,
    posterior_not_no,
    round_half_away_from_zero,
)
from dpexplain.distributions import PrivacyBudget, SeededRng

from helpers import bisect_posterior_threshold


def model(prior, eps, mu_without=0.0):
    return AdversaryModel(prior_no=prior, epsilon=PrivacyBudget(eps), mu_without=mu_without)


def valid_models(seed, count, eps_low=0.05, eps_high=8.0, mu_range=0):
    """Randomly parameterized models satisfying the validity condition."""
    rnd = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        eps = float(np.exp(rnd.uniform(np.log(eps_low), np.log(eps_high))))
        log_odds = float(rnd.uniform(-0.999, 0.999)) * eps
        prior = 1.0 / (1.0 + math.exp(log_odds))
        mu = float(rnd.integers(0, mu_range + 1)) if mu_range else 0.0
        out.append(model(prior, eps, mu))
    return out


class TestAdversaryModel:
    @pytest.mark.parametrize("prior", [0.0, 1.0, -0.2, 1.7])
    def test_rejects_priors_outside_open_interval(self, prior):
        with pytest.raises(ValueError):
            model(prior, 1.0)

    def test_locations_differ_by_one(self):
        m = model(0.5, 1.0, mu_without=3.0)
        assert m.mu_with - m.mu_without == 1.0


class TestDecisionThreshold:
    @pytest.mark.parametrize("eps", [0.01, 0.1, 1.0, 4.0, 100.0])
    def test_symmetric_prior_gives_exact_midpoint(self, eps):
        assert decision_threshold(model(0.5, eps)) == 0.5
        assert decision_threshold(model(0.5, eps, mu_without=3.0)) == 3.5

    def test_frozen_value(self):
        # ln(3)/4 + 0.5; cross-checked by bisection on posterior equality
        assert decision_threshold(model(0.25, 2.0)) == pytest.approx(
            0.7746530721670275, rel=1e-15
        )

    def test_matches_bisection_oracle(self):
        for m in valid_models(seed=3, count=200):
            t = decision_threshold(m)
            oracle = bisect_posterior_threshold(
                lambda r, m=m: posterior_no(m, r), m.mu_without, m.mu_with
            )
            assert abs(t - oracle) < 1e-9

    def test_extreme_prior_raises(self):
        with pytest.raises(ExtremePriorError):
            decision_threshold(model(0.9, 0.1))

    def test_extreme_prior_in_both_directions(self):
        with pytest.raises(ExtremePriorError):
            decision_threshold(model(0.05, 1.0))
        with pytest.raises(ExtremePriorError):
            decision_threshold(model(0.95, 1.0))


class TestPosterior:
    def test_equidistant_point_with_symmetric_prior(self):
        for eps in (0.1, 1.0, 7.0):
            assert posterior_no(model(0.5, eps), 0.5) == pytest.approx(0.5, abs=1e-15)

    def test_frozen_value(self):
        # e^{-2} / (e^{-2} + e^{-4}), hand-evaluated kernels
        assert posterior_no(model(0.5, 2.0), 2.0) == pytest.approx(
            0.8807970779778823, rel=1e-12
        )

    def test_posterior_at_threshold_is_half(self):
        for m in valid_models(seed=5, count=200):
            t = decision_threshold(m)
            assert posterior_no(m, t) == pytest.approx(0.5, abs=1e-9)

    @given(
        st.floats(0.02, 0.98),
        st.floats(0.05, 8.0),
        st.floats(-20.0, 20.0),
    )
    def test_normalization(self, prior, eps, r):
        m = model(prior, eps)
        assert posterior_no(m, r) + posterior_not_no(m, r) == pytest.approx(
            1.0, abs=1e-12
        )

    def test_argmax_equals_threshold_rule(self):
        # 10^4 random triples: posterior > 1/2 iff r > threshold
        rnd = np.random.default_rng(17)
        models = valid_models(seed=19, count=100)
        for m in models:
            t = decision_threshold(m)
            for r in rnd.uniform(m.mu_without - 4, m.mu_with + 4, size=100):
                if abs(r - t) <= 1e-9:
                    continue  # boundary slack
                assert (posterior_no(m, float(r)) > 0.5) == (r > t)


class TestComputeOdds:
    @pytest.mark.parametrize(
        "eps,x,y",
        [(0.1, 48, 52), (0.5, 39, 61), (2.0, 18, 82), (4.0, 7, 93)],
    )
    def test_reference_grid(self, eps, x, y):
        odds = compute_odds(model(0.5, eps))
        assert (odds.x, odds.y) == (x, y)

    def test_unit_epsilon(self):
        # 100 * 0.5 e^{-0.5} = 30.33 -> 30, Monte Carlo cross-checked below
        odds = compute_odds(model(0.5, 1.0))
        assert (odds.x, odds.y) == (30, 70)

    def test_large_denominator(self):
        odds = compute_odds(model(0.5, 0.5), denominator=1000)
        assert (odds.x, odds.y) == (389, 611)

    def test_probabilities_sum_to_one_exactly_at_symmetric_prior(self):
        for eps in (0.1, 0.5, 1.0, 2.0, 4.0, 9.0):
            odds = compute_odds(model(0.5, eps))
            assert odds.p_without + odds.p_with == 1.0
            assert odds.x + odds.y == odds.denominator

    def test_ordering_and_dp_ratio_bounds(self):
        for m in valid_models(seed=23, count=300, mu_range=5):
            odds = compute_odds(m)
            eps = m.epsilon.epsilon
            assert odds.p_without <= odds.p_with
            assert odds.x <= odds.y
            assert odds.p_with / odds.p_without <= math.exp(eps) * (1 + 1e-12)
            assert (1 - odds.p_without) / (1 - odds.p_with) <= math.exp(eps) * (1 + 1e-12)

    def test_monotone_in_epsilon_at_symmetric_prior(self):
        grid = np.exp(np.linspace(np.log(0.01), np.log(10), 200))
        p_with = [compute_odds(model(0.5, float(e))).p_with for e in grid]
        p_without = [compute_odds(model(0.5, float(e))).p_without for e in grid]
        assert all(a < b for a, b in zip(p_with, p_with[1:]))
        assert all(a > b for a, b in zip(p_without, p_without[1:]))

    def test_invalid_denominator(self):
        with pytest.raises(ValueError):
            compute_odds(model(0.5, 1.0), denominator=1)

    def test_propagates_extreme_prior(self):
        with pytest.raises(ExtremePriorError):
            compute_odds(model(0.9, 0.1))


class TestRounding:
    def test_half_away_from_zero(self):
        assert round_half_away_from_zero(47.5) == 48
        assert round_half_away_from_zero(0.5) == 1
        assert round_half_away_from_zero(2.5) == 3
        assert round_half_away_from_zero(-0.5) == -1
        assert round_half_away_from_zero(-2.5) == -3
        assert round_half_away_from_zero(47.49) == 47

    def test_reproduces_reference_pairs_from_unrounded_values(self):
        unrounded = [(47.56, 48), (38.94, 39), (18.39, 18), (6.77, 7),
                     (52.44, 52), (61.06, 61), (81.61, 82), (93.23, 93)]
        for value, expected in unrounded:
            assert round_half_away_from_zero(value) == expected


class TestMonteCarloOdds:
    def test_single_trial_support(self):
        odds = monte_carlo_odds(model(0.5, 1.0), 1, SeededRng(1))
        assert odds.p_without in (0.0, 1.0)
        assert odds.p_with in (0.0, 1.0)

    def test_agrees_with_closed_form_eps2(self):
        odds = monte_carlo_odds(model(0.5, 2.0), 1_000_000, SeededRng(20220131))
        assert odds.p_without == pytest.approx(0.5 * math.exp(-1), abs=0.002)

    def test_agrees_with_closed_form_eps4(self):
        odds = monte_carlo_odds(model(0.5, 4.0), 1_000_000, SeededRng(20220131))
        assert odds.p_with == pytest.approx(1 - 0.5 * math.exp(-2), abs=0.002)

    def test_trials_validation(self):
        with pytest.raises(ValueError):
            monte_carlo_odds(model(0.5, 1.0), 0, SeededRng(1))

    def test_propagates_extreme_prior(self):
        with pytest.raises(ExtremePriorError):
            monte_carlo_odds(model(0.95, 0.5), 10, SeededRng(1))


class TestOutcomeThresholdOdds:
    def test_symmetry_at_location(self):
        assert outcome_threshold_odds(PrivacyBudget(3.3), 3.0, 3.0) == 0.5

    def test_frozen_tail_value(self):
        # 0.5 e^{-0.5}, Monte Carlo cross-checked
        assert outcome_threshold_odds(PrivacyBudget(0.5), 1.0, 2.0) == pytest.approx(
            0.3032653298563167, rel=1e-15
        )

    def test_far_left_threshold(self):
        assert outcome_threshold_odds(PrivacyBudget(4.0), 0.0, -10.0) == pytest.approx(
            1.0, abs=1e-15
        )

    def test_monte_carlo_cross_check(self):
        rng = SeededRng(2)
        b = 2.0
        u = rng.next_uniform_array(500_000) - 0.5
        draws = 1.0 - b * np.sign(u) * np.log1p(-2.0 * np.abs(u))
        empirical = float((draws > 2.0).mean())
        assert outcome_threshold_odds(PrivacyBudget(0.5), 1.0, 2.0) == pytest.approx(
            empirical, abs=0.003
        )
