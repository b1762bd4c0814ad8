"""Declarative data-sharing scenarios and explanation requests.

A scenario captures everything deployment-specific about a data collection:
the survey question, what the sensitive answer is, who the adversary is,
what the released artifact is called, and how many *other* respondents hold
the sensitive answer. Explanations are computed from the scenario plus a
privacy budget, so the same wording machinery ports across deployments.

Scenarios are stored as single JSON documents with snake_case field names.
Parsing is strict: unknown fields are rejected so typos fail loudly.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .distributions import PrivacyBudget

#: Date-style default seed; all bundled stimuli are drawn from it.
DEFAULT_SEED = 20220131

_MAX_SEED = 0xFFFFFFFFFFFFFFFF


class Setting(enum.Enum):
    """Whether contributing data is a choice or only truthfulness is."""

    OPTIONAL = "optional"
    MANDATORY = "mandatory"


class Method(enum.Enum):
    ODDS_TEXT = "odds_text"
    ODDS_VIS = "odds_vis"
    SAMPLE_REPORTS = "sample_reports"
    CONTROL_DETERMINISTIC = "control_deterministic"
    CONTROL_NO_EPSILON = "control_no_epsilon"


#: Default action verb pairs (share, withhold) rendered for each setting.
_DEFAULT_ACTIONS = {
    Setting.OPTIONAL: ("participate", "do not participate"),
    Setting.MANDATORY: ("respond truthfully", "respond untruthfully"),
}


class ScenarioParseError(ValueError):
    """Malformed scenario document; message carries the file/field path."""


class ScenarioValidationError(ValueError):
    """Well-formed document violating a scenario invariant."""


@dataclass(frozen=True)
class Scenario:
    question_text: str
    sensitive_answer_label: str
    setting: Setting
    adversary_label: str
    output_noun: str
    others_sensitive_count: int
    consequence_text: str
    action_share_label: str = ""
    action_withhold_label: str = ""

    def __post_init__(self):
        if self.action_share_label == "":
            object.__setattr__(
                self, "action_share_label", _DEFAULT_ACTIONS[self.setting][0]
            )
        if self.action_withhold_label == "":
            object.__setattr__(
                self, "action_withhold_label", _DEFAULT_ACTIONS[self.setting][1]
            )
        for name in (
            "question_text",
            "sensitive_answer_label",
            "adversary_label",
            "output_noun",
            "consequence_text",
            "action_share_label",
            "action_withhold_label",
        ):
            value = getattr(self, name)
            if not isinstance(value, str) or not value.strip():
                raise ScenarioValidationError(f"{name} must be a nonempty string")
        if not isinstance(self.setting, Setting):
            raise ScenarioValidationError("setting must be 'optional' or 'mandatory'")
        count = self.others_sensitive_count
        if not isinstance(count, int) or isinstance(count, bool) or count < 0:
            raise ScenarioValidationError(
                f"others_sensitive_count must be a nonnegative integer, got {count!r}"
            )

    @property
    def mu_without(self) -> float:
        return float(self.others_sensitive_count)

    @property
    def mu_with(self) -> float:
        return float(self.others_sensitive_count + 1)

    def with_setting(self, setting: Setting) -> "Scenario":
        """Same scenario under the other setting, with that setting's verbs."""
        share, withhold = _DEFAULT_ACTIONS[setting]
        return replace(
            self,
            setting=setting,
            action_share_label=share,
            action_withhold_label=withhold,
        )


_REQUIRED_FIELDS = (
    "question_text",
    "sensitive_answer_label",
    "setting",
    "adversary_label",
    "output_noun",
    "others_sensitive_count",
    "consequence_text",
)
_OPTIONAL_FIELDS = ("action_share_label", "action_withhold_label")


def scenario_from_dict(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioParseError(f"scenario document must be a JSON object, got {type(doc).__name__}")
    known = set(_REQUIRED_FIELDS) | set(_OPTIONAL_FIELDS)
    unknown = sorted(set(doc) - known)
    if unknown:
        raise ScenarioParseError(f"unknown scenario field(s): {', '.join(unknown)}")
    missing = [name for name in _REQUIRED_FIELDS if name not in doc]
    if missing:
        raise ScenarioParseError(f"missing required scenario field(s): {', '.join(missing)}")
    for name in _OPTIONAL_FIELDS:
        if name in doc and (not isinstance(doc[name], str) or not doc[name].strip()):
            raise ScenarioValidationError(f"{name} must be a nonempty string when given")
    raw = dict(doc)
    setting_value = raw.pop("setting")
    try:
        setting = Setting(setting_value)
    except ValueError:
        raise ScenarioParseError(
            f"setting: expected 'optional' or 'mandatory', got {setting_value!r}"
        ) from None
    return Scenario(setting=setting, **raw)


def scenario_to_dict(s: Scenario) -> dict:
    doc = {}
    for f in fields(Scenario):
        value = getattr(s, f.name)
        doc[f.name] = value.value if isinstance(value, Setting) else value
    return doc


def parse_scenario(text: str, source: str = "<string>") -> Scenario:
    """Parse and validate one scenario JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(
            f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    try:
        return scenario_from_dict(doc)
    except (ScenarioParseError, ScenarioValidationError) as exc:
        raise type(exc)(f"{source}: {exc}") from None


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    return parse_scenario(path.read_text(encoding="utf-8"), source=str(path))


def bundled_scenario_dir() -> Path:
    return Path(__file__).parent / "scenarios"


def load_bundled_scenario(scenario_id: str) -> Scenario:
    return load_scenario(bundled_scenario_dir() / f"{scenario_id}.json")


def validate_request_numbers(
    prior_no: float, denominator: int, n_samples: int, seed: int
) -> None:
    """Shared numeric checks; the CLI runs these before any file I/O."""
    if not (isinstance(prior_no, (int, float)) and 0.0 < prior_no < 1.0):
        raise ScenarioValidationError(
            f"prior_no must lie strictly in (0, 1), got {prior_no!r}"
        )
    if not (isinstance(denominator, int) and denominator >= 2):
        raise ScenarioValidationError(
            f"denominator must be an integer >= 2, got {denominator!r}"
        )
    if not (isinstance(n_samples, int) and n_samples >= 1):
        raise ScenarioValidationError(
            f"n_samples must be a positive integer, got {n_samples!r}"
        )
    if not (isinstance(seed, int) and 0 <= seed <= _MAX_SEED):
        raise ScenarioValidationError(
            f"seed must be an unsigned 64-bit integer, got {seed!r}"
        )


@dataclass(frozen=True)
class ExplanationRequest:
    """Everything needed to compute one explanation artifact."""

    scenario: Scenario
    epsilon: PrivacyBudget
    method: Method
    prior_no: float = 0.5
    denominator: int = 100
    n_samples: int = 5
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        validate_request_numbers(self.prior_no, self.denominator, self.n_samples, self.seed)
