"""Command-line interface.

Subcommands:

* explain  -- render one explanation artifact for a scenario and budget,
  writing ``<method>_<epsilon>.{txt|svg}`` plus a ``.json`` payload.
* table    -- the odds pairs across a list of budgets as tab-delimited
  output; with --out-dir also writes table.csv and a matplotlib figure.
* simulate -- Monte Carlo check of the closed-form odds.
* serve    -- run the JSON API (and optionally the explorer UI bundle).

Exit codes are a stable contract: 0 success, 1 parse/validation/usage,
2 extreme prior, 3 I/O failure, 4 simulation gap check failed. Errors
print one machine-readable JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from .adversary import (
    AdversaryModel,
    ExtremePriorError,
    compute_odds,
    monte_carlo_odds,
)
from .distributions import PrivacyBudget, SeededRng
from .payloads import build_explain_payload, payload_to_json
from .render import render_control, render_icon_array, render_odds_text, render_sample_reports
from .scenario import (
    DEFAULT_SEED,
    ExplanationRequest,
    Method,
    ScenarioParseError,
    ScenarioValidationError,
    bundled_scenario_dir,
    load_scenario,
    validate_request_numbers,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_EXTREME_PRIOR = 2
EXIT_IO = 3
EXIT_CHECK_FAILED = 4

DEFAULT_EPSILON_GRID = (0.1, 0.5, 2.0, 4.0)


def _emit_error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; our contract reserves 2 for extreme
    # priors, so remap usage problems to the validation exit code.
    def error(self, message):
        _emit_error("usage", message)
        raise SystemExit(EXIT_VALIDATION)


def format_epsilon(eps: float) -> str:
    return f"{eps:g}"


def _parse_epsilon_list(text: str) -> list[PrivacyBudget]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("epsilon list is empty")
    return [PrivacyBudget(float(p)) for p in parts]


def _build_request(args, method: Method) -> ExplanationRequest:
    budget = PrivacyBudget(args.epsilon)
    validate_request_numbers(args.prior, args.denominator, args.samples, args.seed)
    scenario_path = args.scenario or bundled_scenario_dir() / "workplace.json"
    scenario = load_scenario(scenario_path)
    return ExplanationRequest(
        scenario=scenario,
        epsilon=budget,
        method=method,
        prior_no=args.prior,
        denominator=args.denominator,
        n_samples=args.samples,
        seed=args.seed,
    )


def cmd_explain(args) -> int:
    try:
        method = Method(args.method)
    except ValueError:
        raise ScenarioValidationError(
            f"unknown method {args.method!r}; choose from "
            + ", ".join(m.value for m in Method)
        ) from None
    req = _build_request(args, method)
    payload = build_explain_payload(req, scenario_id=Path(args.scenario).stem if args.scenario else "workplace")

    out_dir = Path(args.out_dir)
    stem = f"{method.value}_{format_epsilon(req.epsilon.epsilon)}"
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        if method is Method.ODDS_TEXT:
            (out_dir / f"{stem}.txt").write_text(
                render_odds_text(req).as_text(), encoding="utf-8"
            )
        elif method is Method.ODDS_VIS:
            (out_dir / f"{stem}.svg").write_text(
                render_icon_array(req).svg, encoding="utf-8"
            )
        elif method is Method.SAMPLE_REPORTS:
            (out_dir / f"{stem}.txt").write_text(
                render_sample_reports(req).as_text(req.scenario), encoding="utf-8"
            )
        else:
            (out_dir / f"{stem}.txt").write_text(render_control(req), encoding="utf-8")
        (out_dir / f"{stem}.json").write_text(payload_to_json(payload), encoding="utf-8")
    except OSError as exc:
        _emit_error("io", f"failed writing artifacts to {out_dir}: {exc}")
        return EXIT_IO

    odds = payload["odds"]
    summary = f"method={method.value} epsilon={format_epsilon(req.epsilon.epsilon)} prior={req.prior_no:g} seed={req.seed}"
    if odds is not None:
        summary += (
            f" x={odds['x']} y={odds['y']} denominator={odds['denominator']}"
            f" threshold={odds['threshold']:.6g}"
        )
    print(summary)
    print(f"wrote {out_dir / stem}.* ")
    return EXIT_OK


def _table_rows(epsilons: Sequence[PrivacyBudget], prior: float, denominator: int) -> list[dict]:
    rows = []
    for budget in epsilons:
        odds = compute_odds(AdversaryModel(prior_no=prior, epsilon=budget), denominator)
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
    return rows


def cmd_table(args) -> int:
    if args.epsilons is None:
        epsilons = [PrivacyBudget(e) for e in DEFAULT_EPSILON_GRID]
    else:
        epsilons = _parse_epsilon_list(args.epsilons)
    rows = _table_rows(epsilons, args.prior, args.denominator)

    print("epsilon\tx\ty")
    for row in rows:
        print(f"{format_epsilon(row['epsilon'])}\t{row['x']}\t{row['y']}")

    if args.out_dir is not None:
        out_dir = Path(args.out_dir)
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
            lines = ["epsilon,x,y,denominator,p_without,p_with"]
            for row in rows:
                lines.append(
                    f"{format_epsilon(row['epsilon'])},{row['x']},{row['y']},"
                    f"{row['denominator']},{row['p_without']!r},{row['p_with']!r}"
                )
            (out_dir / "table.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
            from .charts import save_odds_vs_epsilon_figure

            save_odds_vs_epsilon_figure(rows, out_dir / "odds_vs_epsilon.png")
            print(f"wrote {out_dir}/table.csv and {out_dir}/odds_vs_epsilon.png")
        except OSError as exc:
            _emit_error("io", f"failed writing table outputs to {out_dir}: {exc}")
            return EXIT_IO
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.trials < 1:
        raise ScenarioValidationError(f"trials must be >= 1, got {args.trials}")
    budget = PrivacyBudget(args.epsilon)
    model = AdversaryModel(prior_no=args.prior, epsilon=budget)
    closed = compute_odds(model)
    rng = SeededRng(args.seed)
    empirical = monte_carlo_odds(model, args.trials, rng)
    se = 0.5 / math.sqrt(args.trials)
    gap_without = abs(empirical.p_without - closed.p_without)
    gap_with = abs(empirical.p_with - closed.p_with)
    result = {
        "epsilon": budget.epsilon,
        "prior_no": args.prior,
        "trials": args.trials,
        "seed": args.seed,
        "closed_form": {"p_without": closed.p_without, "p_with": closed.p_with},
        "empirical": {"p_without": empirical.p_without, "p_with": empirical.p_with},
        "gaps": {"p_without": gap_without, "p_with": gap_with},
        "gap_limit": 4.0 * se,
    }

    print(f"epsilon={format_epsilon(budget.epsilon)} prior={args.prior:g} trials={args.trials} seed={args.seed}")
    print("quantity\tclosed_form\tempirical\tgap")
    print(f"p_without\t{closed.p_without:.6f}\t{empirical.p_without:.6f}\t{gap_without:.6f}")
    print(f"p_with\t{closed.p_with:.6f}\t{empirical.p_with:.6f}\t{gap_with:.6f}")
    ok = gap_without <= 4.0 * se and gap_with <= 4.0 * se
    print(f"gap limit (4*SE) = {4.0 * se:.6f} -> {'OK' if ok else 'FAILED'}")

    if args.out_dir is not None:
        out_dir = Path(args.out_dir)
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
            (out_dir / "simulate.json").write_text(
                json.dumps(result, sort_keys=True, indent=2) + "\n", encoding="utf-8"
            )
            from .charts import save_simulation_figure

            save_simulation_figure(result, out_dir / "simulate.png")
            print(f"wrote {out_dir}/simulate.json and {out_dir}/simulate.png")
        except OSError as exc:
            _emit_error("io", f"failed writing simulation outputs to {out_dir}: {exc}")
            return EXIT_IO
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(
        extra_scenario_dir=Path(args.scenarios_dir) if args.scenarios_dir else None,
        static_dir=Path(args.static_dir) if args.static_dir else None,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _add_common_request_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prior", type=float, default=0.5, help="adversary prior P_no (default 0.5)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"unsigned 64-bit seed (default {DEFAULT_SEED})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dpexplain",
                     description="Adversary-inference odds and explanation artifacts "
                                 "for the central-model Laplace mechanism.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_explain = sub.add_parser("explain", help="render one explanation artifact")
    p_explain.add_argument("--scenario", type=str, default=None,
                           help="scenario JSON path (default: bundled workplace scenario)")
    p_explain.add_argument("--epsilon", type=float, required=True, help="privacy budget, > 0")
    p_explain.add_argument("--method", type=str, required=True,
                           help="one of: " + ", ".join(m.value for m in Method))
    p_explain.add_argument("--denominator", type=int, default=100)
    p_explain.add_argument("--samples", type=int, default=5,
                           help="sample-report draws per action (default 5)")
    p_explain.add_argument("--out-dir", type=str, default=".")
    _add_common_request_flags(p_explain)
    p_explain.set_defaults(func=cmd_explain)

    p_table = sub.add_parser("table", help="odds pairs across privacy budgets")
    p_table.add_argument("--epsilons", type=str, default=None,
                         help="comma-separated budgets (default: 0.1,0.5,2,4)")
    p_table.add_argument("--prior", type=float, default=0.5)
    p_table.add_argument("--denominator", type=int, default=100)
    p_table.add_argument("--out-dir", type=str, default=None,
                         help="also write table.csv and odds_vs_epsilon.png here")
    p_table.set_defaults(func=cmd_table)

    p_sim = sub.add_parser("simulate", help="Monte Carlo check of the closed-form odds")
    p_sim.add_argument("--epsilon", type=float, required=True)
    p_sim.add_argument("--trials", type=int, default=1_000_000)
    p_sim.add_argument("--out-dir", type=str, default=None,
                       help="also write simulate.json and simulate.png here")
    _add_common_request_flags(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    p_serve = sub.add_parser("serve", help="run the JSON API")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", type=str, default="127.0.0.1")
    p_serve.add_argument("--scenarios-dir", type=str, default=None,
                         help="extra scenario fixtures to register")
    p_serve.add_argument("--static-dir", type=str, default=None,
                         help="static bundle (the explorer UI) to serve at /")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExtremePriorError as exc:
        _emit_error("extreme_prior", str(exc))
        return EXIT_EXTREME_PRIOR
    except (ScenarioParseError, ScenarioValidationError, ValueError) as exc:
        _emit_error("validation", str(exc))
        return EXIT_VALIDATION
    except OSError as exc:
        _emit_error("io", str(exc))
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
