"""Structured explanation payloads shared by the CLI and the JSON API.

Both surfaces call build_explain_payload with the same request, so their
numeric fields agree field-for-field by construction; the payload is also
what gets serialized to the CLI's ``<method>_<epsilon>.json`` artifact.
"""

from __future__ import annotations

import json
from typing import Optional

from .adversary import ExtremePriorError, compute_odds, decision_threshold
from .render import (
    adversary_model,
    render_control,
    render_icon_array,
    render_odds_text,
    render_sample_reports,
)
from .scenario import ExplanationRequest, Method, scenario_to_dict

SCHEMA_VERSION = 1

_EXPERIMENTAL = (Method.ODDS_TEXT, Method.ODDS_VIS, Method.SAMPLE_REPORTS)
_CONTROLS = (Method.CONTROL_DETERMINISTIC, Method.CONTROL_NO_EPSILON)


def _odds_block(req: ExplanationRequest) -> dict:
    model = adversary_model(req)
    odds = compute_odds(model, req.denominator)
    return {
        "x": odds.x,
        "y": odds.y,
        "denominator": odds.denominator,
        "p_without": odds.p_without,
        "p_with": odds.p_with,
        "threshold": decision_threshold(model),
    }


def build_explain_payload(
    req: ExplanationRequest,
    scenario_id: Optional[str] = None,
    all_artifacts: bool = False,
) -> dict:
    """Full explanation payload for one request.

    With ``all_artifacts`` the payload carries all three experimental
    artifacts regardless of ``req.method`` (the shape the what-if explorer
    consumes in one fetch) and echoes method as null. Otherwise only
    ``req.method``'s artifact is included. Control methods carry just their
    text: they never mention the budget, so no odds block is computed and an
    extreme prior is not an error for them.
    """
    artifacts: dict = {}
    odds: Optional[dict] = None
    wanted = set(_EXPERIMENTAL) if all_artifacts else {req.method}

    if req.method in _CONTROLS and not all_artifacts:
        artifacts["control_text"] = render_control(req)
    else:
        needs_odds = bool(wanted & {Method.ODDS_TEXT, Method.ODDS_VIS})
        try:
            odds = _odds_block(req)
        except ExtremePriorError:
            if needs_odds:
                raise
            odds = None
        if Method.ODDS_TEXT in wanted:
            text = render_odds_text(req)
            artifacts["odds_text"] = {
                "preamble": text.preamble,
                "line_withhold": text.line_withhold,
                "line_share": text.line_share,
            }
        if Method.ODDS_VIS in wanted:
            artifacts["icon_array_svg"] = render_icon_array(req).svg
        if Method.SAMPLE_REPORTS in wanted:
            samples = render_sample_reports(req)
            artifacts["sample_reports"] = {
                "disclaimer": samples.disclaimer,
                "draws_withhold": list(samples.draws_withhold),
                "draws_share": list(samples.draws_share),
                "display_withhold": list(samples.display_withhold),
                "display_share": list(samples.display_share),
                "display_precision": samples.display_precision,
                "seed": samples.seed,
            }

    return {
        "schema_version": SCHEMA_VERSION,
        "request": {
            "scenario_id": scenario_id,
            "scenario": scenario_to_dict(req.scenario),
            "epsilon": req.epsilon.epsilon,
            "prior_no": req.prior_no,
            "method": None if all_artifacts else req.method.value,
            "denominator": req.denominator,
            "n_samples": req.n_samples,
            "seed": req.seed,
        },
        "odds": odds,
        "artifacts": artifacts,
    }


def payload_to_json(payload: dict) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=2) + "\n"
