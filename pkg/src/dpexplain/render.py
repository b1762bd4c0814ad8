"""Rendering of end-user explanation artifacts from computed values.

Three experimental artifacts:

* odds text   -- two frequency-framed sentences ("x out of 100 potential
  reports will lead ... to believe you responded NO"), one per action the
  data sharer can take.
* icon array  -- the same two frequencies as 10x10 grids of icons in an
  SVG document, filled top to bottom within columns, columns left to
  right. Colors come from the Tableau 10 palette family, chosen with
  color-vision deficiencies in mind.
* sample reports -- n concrete mechanism outputs per action, shown to one
  decimal place, preceded by a disclaimer that values may be fractional
  or negative.

Plus two control texts: a deterministic scenario description with no
privacy method at all, and a state-of-the-art style description that
mentions added random noise but says nothing about the budget.

All rendering is pure: identical request (including seed) gives
byte-identical artifacts.
"""

from __future__ import annotations

import math
import textwrap
from dataclasses import dataclass

from .adversary import AdversaryModel, OddsPair, compute_odds
from .mechanism import Branch, CountQuery, release_count
from .distributions import SeededRng
from .scenario import ExplanationRequest, Method, Scenario

HIGHLIGHT_COLOR = "#4E79A7"
MUTED_COLOR = "#BAB0AC"
ICON_ROWS = 10
ICON_COLS = 10
DISPLAY_PRECISION = 1


class UnsupportedDenominatorError(ValueError):
    """Icon arrays are a 10x10 grid and require denominator 100."""


def adversary_model(req: ExplanationRequest) -> AdversaryModel:
    return AdversaryModel(
        prior_no=req.prior_no,
        epsilon=req.epsilon,
        mu_without=req.scenario.mu_without,
    )


def _singular(noun: str) -> str:
    # Naive singularization; scenario nouns are plain plurals like "reports".
    return noun[:-1] if noun.endswith("s") else noun


def _capitalize(s: str) -> str:
    return s[0].upper() + s[1:] if s else s


def odds_line(scenario: Scenario, action: str, count: int, denominator: int) -> str:
    return (
        f"If you {action}, {count} out of {denominator} potential "
        f"{scenario.output_noun} will lead {scenario.adversary_label} to believe "
        f"you responded {scenario.sensitive_answer_label}."
    )


def odds_preamble(scenario: Scenario) -> str:
    answer = scenario.sensitive_answer_label
    singular = _singular(scenario.output_noun)
    return (
        f"The total number of {answer} responses will not be reported exactly. "
        f"Instead, many potential {scenario.output_noun} will be generated by "
        f"using a statistical method to modify the total number of {answer} "
        f"responses. So, each potential {singular} may show a number somewhat "
        f"lower or higher than the actual number of {answer} responses. "
        f"Only ONE {singular} will be randomly sent to {scenario.adversary_label}."
    )


@dataclass(frozen=True)
class OddsTextExplanation:
    preamble: str
    line_withhold: str
    line_share: str
    odds: OddsPair

    def as_text(self) -> str:
        return f"{self.preamble}\n\n{self.line_withhold}\n{self.line_share}\n"


def render_odds_text(req: ExplanationRequest) -> OddsTextExplanation:
    """Instantiate both template sentences with the computed odds pair."""
    odds = compute_odds(adversary_model(req), req.denominator)
    scenario = req.scenario
    return OddsTextExplanation(
        preamble=odds_preamble(scenario),
        line_withhold=odds_line(
            scenario, scenario.action_withhold_label, odds.x, odds.denominator
        ),
        line_share=odds_line(
            scenario, scenario.action_share_label, odds.y, odds.denominator
        ),
        odds=odds,
    )


@dataclass(frozen=True)
class IconArraySpec:
    rows: int
    cols: int
    highlighted_withhold: int
    highlighted_share: int
    color_highlighted: str = HIGHLIGHT_COLOR
    color_unhighlighted: str = MUTED_COLOR
    fill_order: str = "top-to-bottom within columns, columns left-to-right"


@dataclass(frozen=True)
class IconArrayExplanation:
    svg: str
    spec: IconArraySpec
    odds: OddsPair
    line_withhold: str
    line_share: str


# SVG geometry (integer coordinates keep the output byte-stable).
_CELL = 18
_RADIUS = 7
_MARGIN = 16
_LABEL_LINE_HEIGHT = 15
_LABEL_WRAP = 88
_PANEL_GAP = 26
_SVG_WIDTH = 2 * _MARGIN + 30 * _CELL


def _icon_elements(origin_x: int, origin_y: int, highlighted: int, glyph: str) -> list[str]:
    cells = []
    for k in range(ICON_ROWS * ICON_COLS):
        col, row = divmod(k, ICON_ROWS)
        fill = HIGHLIGHT_COLOR if k < highlighted else MUTED_COLOR
        cx = origin_x + col * _CELL + _CELL // 2
        cy = origin_y + row * _CELL + _CELL // 2
        if glyph == "circle":
            cells.append(f'    <circle cx="{cx}" cy="{cy}" r="{_RADIUS}" fill="{fill}"/>')
        else:
            half = _RADIUS
            cells.append(
                f'    <rect x="{cx - half}" y="{cy - half}" '
                f'width="{2 * half}" height="{2 * half}" fill="{fill}"/>'
            )
    return cells


def _panel(panel_id: str, label: str, top: int, highlighted: int, glyph: str) -> tuple[list[str], int]:
    lines = textwrap.wrap(label, width=_LABEL_WRAP)
    parts = [f'  <g id="{panel_id}">']
    y = top
    for line in lines:
        y += _LABEL_LINE_HEIGHT
        parts.append(
            f'    <text x="{_MARGIN}" y="{y}" font-family="sans-serif" '
            f'font-size="12">{_escape(line)}</text>'
        )
    grid_top = y + 8
    parts.extend(_icon_elements(_MARGIN, grid_top, highlighted, glyph))
    parts.append("  </g>")
    return parts, grid_top + ICON_ROWS * _CELL


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_icon_array(req: ExplanationRequest, glyph: str = "circle") -> IconArrayExplanation:
    """Two labeled 10x10 icon panels as a deterministic SVG document.

    Icon k (0-indexed, column-major top-to-bottom) is highlighted iff
    k < highlighted count, so a count of 48 fills columns 0-3 and the top
    8 icons of column 4.
    """
    if req.denominator != 100:
        raise UnsupportedDenominatorError(
            f"icon arrays require denominator 100 (a 10x10 grid), got {req.denominator}"
        )
    if glyph not in ("circle", "square"):
        raise ValueError(f"glyph must be 'circle' or 'square', got {glyph!r}")
    text = render_odds_text(req)
    odds = text.odds
    spec = IconArraySpec(
        rows=ICON_ROWS,
        cols=ICON_COLS,
        highlighted_withhold=odds.x,
        highlighted_share=odds.y,
    )
    withhold_parts, withhold_bottom = _panel(
        "panel-withhold", text.line_withhold, _MARGIN, odds.x, glyph
    )
    share_parts, share_bottom = _panel(
        "panel-share", text.line_share, withhold_bottom + _PANEL_GAP, odds.y, glyph
    )
    height = share_bottom + _MARGIN
    body = "\n".join(withhold_parts + share_parts)
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_WIDTH}" '
        f'height="{height}" viewBox="0 0 {_SVG_WIDTH} {height}">\n'
        f"{body}\n</svg>\n"
    )
    return IconArrayExplanation(
        svg=svg,
        spec=spec,
        odds=odds,
        line_withhold=text.line_withhold,
        line_share=text.line_share,
    )


@dataclass(frozen=True)
class SampleReportsExplanation:
    draws_withhold: tuple[float, ...]
    draws_share: tuple[float, ...]
    disclaimer: str
    seed: int
    display_precision: int = DISPLAY_PRECISION

    @property
    def display_withhold(self) -> tuple[str, ...]:
        return tuple(format_sample(v) for v in self.draws_withhold)

    @property
    def display_share(self) -> tuple[str, ...]:
        return tuple(format_sample(v) for v in self.draws_share)

    def as_text(self, scenario: Scenario) -> str:
        withhold = ", ".join(self.display_withhold)
        share = ", ".join(self.display_share)
        return (
            f"{self.disclaimer}\n\n"
            f"If you {scenario.action_withhold_label}: {withhold}\n"
            f"If you {scenario.action_share_label}: {share}\n"
        )


def format_sample(v: float) -> str:
    """One-decimal display; -0.0 is shown as 0.0."""
    s = f"{v:.{DISPLAY_PRECISION}f}"
    return "0.0" if s == "-0.0" else s


def sample_disclaimer(scenario: Scenario) -> str:
    return (
        f"The total number of {scenario.sensitive_answer_label} responses may "
        "be fractional or negative due to the privacy method."
    )


def render_sample_reports(req: ExplanationRequest) -> SampleReportsExplanation:
    """n seeded mechanism outputs per action, without post-processing.

    A single generator seeded from the request draws the withhold-branch
    values first, then the share-branch values, so one seed fixes the whole
    stimulus; every viewer of the same request sees the same numbers.
    """
    rng = SeededRng(req.seed)
    query = CountQuery(true_count_without=req.scenario.others_sensitive_count)
    withhold = tuple(
        release_count(query, Branch.WITHOUT_SUBJECT, req.epsilon, rng).value
        for _ in range(req.n_samples)
    )
    share = tuple(
        release_count(query, Branch.WITH_SUBJECT, req.epsilon, rng).value
        for _ in range(req.n_samples)
    )
    return SampleReportsExplanation(
        draws_withhold=withhold,
        draws_share=share,
        disclaimer=sample_disclaimer(req.scenario),
        seed=req.seed,
    )


def scenario_base_text(scenario: Scenario) -> str:
    """The scenario description shared by all conditions, privacy bits aside."""
    answer = scenario.sensitive_answer_label
    singular = _singular(scenario.output_noun)
    adversary = scenario.adversary_label
    return (
        f"{scenario.question_text}\n\n"
        f"You want to respond {answer}.\n\n"
        f"{scenario.consequence_text}\n\n"
        f"You must decide whether to {scenario.action_share_label} or to "
        f"{scenario.action_withhold_label}.\n\n"
        f"{_capitalize(adversary)} will receive a {singular} with the results "
        f"of the survey. The {singular} will say the total number of {answer} "
        f"responses, without any names attached. {_capitalize(adversary)} can "
        f"still use the {singular} to try to guess your response."
    )


def control_no_epsilon_text(scenario: Scenario) -> str:
    answer = scenario.sensitive_answer_label
    singular = _singular(scenario.output_noun)
    adversary = scenario.adversary_label
    return (
        f"However, to respect your personal information privacy, the {singular} "
        f"shared with {adversary} will include the total number of {answer} "
        "responses processed using a privacy protection method. This method "
        "protects individuals' privacy by adding random noise to aggregated "
        f"data, for example, the total number of {answer} responses, such that "
        f"the probability that {adversary} can infer your response on the "
        "survey is lower than without the privacy protection."
    )


def render_control(req: ExplanationRequest) -> str:
    """Control texts. Neither mentions the privacy budget.

    The deterministic control is the bare scenario text: no noise, so the
    adversary's belief follows the subject's action with certainty. The
    no-budget control appends a noise description that never quantifies it.
    """
    if req.method is Method.CONTROL_DETERMINISTIC:
        return scenario_base_text(req.scenario) + "\n"
    if req.method is Method.CONTROL_NO_EPSILON:
        return (
            scenario_base_text(req.scenario)
            + "\n\n"
            + control_no_epsilon_text(req.scenario)
            + "\n"
        )
    raise ValueError(f"render_control requires a control method, got {req.method}")
