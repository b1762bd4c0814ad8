"""dpexplain: odds-based explanations of Laplace-mechanism privacy budgets.

Computes the exact adversary-inference odds implied by a privacy budget for
count queries under the central-model Laplace mechanism (including Bayesian
priors), and renders them as end-user explanation artifacts: frequency-framed
odds text, icon-array SVGs, and concrete sample reports.
"""

from .adversary import (
    AdversaryModel,
    ExtremePriorError,
    OddsPair,
    compute_odds,
    decision_threshold,
    monte_carlo_odds,
    outcome_threshold_odds,
    posterior_no,
    posterior_not_no,
)
from .distributions import (
    LaplaceDistribution,
    PrivacyBudget,
    SeededRng,
    laplace_cdf,
    laplace_pdf,
    laplace_sample,
    laplace_sf,
)
from .mechanism import Branch, CountQuery, MechanismOutput, dp_ratio_check, release_count
from .render import (
    IconArrayExplanation,
    OddsTextExplanation,
    SampleReportsExplanation,
    UnsupportedDenominatorError,
    render_control,
    render_icon_array,
    render_odds_text,
    render_sample_reports,
)
from .scenario import (
    DEFAULT_SEED,
    ExplanationRequest,
    Method,
    Scenario,
    ScenarioParseError,
    ScenarioValidationError,
    Setting,
    load_bundled_scenario,
    load_scenario,
    parse_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "AdversaryModel",
    "Branch",
    "CountQuery",
    "DEFAULT_SEED",
    "ExplanationRequest",
    "ExtremePriorError",
    "IconArrayExplanation",
    "LaplaceDistribution",
    "MechanismOutput",
    "Method",
    "OddsPair",
    "OddsTextExplanation",
    "PrivacyBudget",
    "SampleReportsExplanation",
    "Scenario",
    "ScenarioParseError",
    "ScenarioValidationError",
    "SeededRng",
    "Setting",
    "UnsupportedDenominatorError",
    "compute_odds",
    "decision_threshold",
    "dp_ratio_check",
    "laplace_cdf",
    "laplace_pdf",
    "laplace_sample",
    "laplace_sf",
    "load_bundled_scenario",
    "load_scenario",
    "monte_carlo_odds",
    "outcome_threshold_odds",
    "parse_scenario",
    "posterior_no",
    "posterior_not_no",
    "release_count",
    "render_control",
    "render_icon_array",
    "render_odds_text",
    "render_sample_reports",
]
