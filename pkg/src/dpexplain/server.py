"""HTTP/JSON facade over the library for the explorer UI and other clients.

Stateless: every response is a pure function of the query (seeds are
client-supplied, defaulting to the package default), so identical requests
return identical bodies and responses are cacheable. The scenario registry
is read from disk once at startup and immutable afterwards.

Error contract: 400 for validation problems (the body names the violated
invariant), 404 for unknown scenario ids, 422 when the prior is too extreme
for the budget.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .adversary import AdversaryModel, ExtremePriorError, compute_odds
from .distributions import PrivacyBudget
from .cli import DEFAULT_EPSILON_GRID
from .payloads import build_explain_payload
from .render import UnsupportedDenominatorError
from .scenario import (
    DEFAULT_SEED,
    ExplanationRequest,
    Method,
    Scenario,
    ScenarioParseError,
    ScenarioValidationError,
    bundled_scenario_dir,
    load_scenario,
)


def load_scenario_registry(extra_dir: Optional[Path] = None) -> dict[str, Scenario]:
    """Filesystem-backed registry: bundled fixtures plus an optional extra
    directory (extra entries win on id collision). A malformed fixture fails
    startup with the offending file named."""
    registry: dict[str, Scenario] = {}
    dirs = [bundled_scenario_dir()]
    if extra_dir is not None:
        dirs.append(extra_dir)
    for directory in dirs:
        for path in sorted(directory.glob("*.json")):
            try:
                registry[path.stem] = load_scenario(path)
            except (ScenarioParseError, ScenarioValidationError) as exc:
                raise RuntimeError(f"bad scenario fixture {path}: {exc}") from exc
    return registry


def _parse_method(value: Optional[str]) -> Optional[Method]:
    if value is None:
        return None
    try:
        return Method(value)
    except ValueError:
        raise HTTPException(
            status_code=400,
            detail=f"unknown method {value!r}; choose from "
            + ", ".join(m.value for m in Method),
        ) from None


def _budget_or_400(epsilon: float) -> PrivacyBudget:
    try:
        return PrivacyBudget(epsilon)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


def create_app(
    extra_scenario_dir: Optional[Path] = None,
    static_dir: Optional[Path] = None,
) -> FastAPI:
    registry = load_scenario_registry(extra_scenario_dir)
    app = FastAPI(title="dpexplain", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        # FastAPI's default is 422; this API reserves 422 for extreme priors.
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.get("/api/v1/explain")
    def explain(
        epsilon: float,
        prior: float = 0.5,
        method: Optional[str] = None,
        seed: int = DEFAULT_SEED,
        scenario_id: str = "workplace",
        denominator: int = 100,
        samples: int = 5,
    ):
        budget = _budget_or_400(epsilon)
        parsed_method = _parse_method(method)
        if scenario_id not in registry:
            raise HTTPException(
                status_code=404,
                detail=f"unknown scenario_id {scenario_id!r}; known: "
                + ", ".join(sorted(registry)),
            )
        try:
            req = ExplanationRequest(
                scenario=registry[scenario_id],
                epsilon=budget,
                method=parsed_method if parsed_method is not None else Method.ODDS_TEXT,
                prior_no=prior,
                denominator=denominator,
                n_samples=samples,
                seed=seed,
            )
        except ScenarioValidationError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        try:
            return build_explain_payload(
                req,
                scenario_id=scenario_id,
                all_artifacts=parsed_method is None,
            )
        except ExtremePriorError as exc:
            raise HTTPException(
                status_code=422,
                detail={
                    "error": "extreme_prior",
                    "message": str(exc),
                    "condition": "max((1-P_no)/P_no, P_no/(1-P_no)) <= exp(epsilon)",
                },
            ) from None
        except UnsupportedDenominatorError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None

    @app.get("/api/v1/table")
    def table(
        epsilons: Optional[str] = None,
        prior: float = 0.5,
        denominator: int = 100,
    ):
        if epsilons is None:
            values = list(DEFAULT_EPSILON_GRID)
        else:
            parts = [p.strip() for p in epsilons.split(",") if p.strip()]
            if not parts:
                raise HTTPException(status_code=400, detail="epsilons list is empty")
            try:
                values = [float(p) for p in parts]
            except ValueError:
                raise HTTPException(
                    status_code=400, detail=f"epsilons must be numbers, got {epsilons!r}"
                ) from None
        rows = []
        try:
            for value in values:
                budget = _budget_or_400(value)
                odds = compute_odds(
                    AdversaryModel(prior_no=prior, epsilon=budget), denominator
                )
                rows.append(
                    {
                        "epsilon": budget.epsilon,
                        "x": odds.x,
                        "y": odds.y,
                        "denominator": odds.denominator,
                        "p_without": odds.p_without,
                        "p_with": odds.p_with,
                    }
                )
        except ExtremePriorError as exc:
            raise HTTPException(
                status_code=422,
                detail={"error": "extreme_prior", "message": str(exc)},
            ) from None
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return rows

    @app.get("/api/v1/scenarios")
    def scenarios():
        return [
            {
                "id": scenario_id,
                "question_text": s.question_text,
                "adversary_label": s.adversary_label,
                "setting": s.setting.value,
                "sensitive_answer_label": s.sensitive_answer_label,
                "others_sensitive_count": s.others_sensitive_count,
            }
            for scenario_id, s in sorted(registry.items())
        ]

    if static_dir is not None and static_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
