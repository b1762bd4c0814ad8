"""Report figures rendered to files next to the delimited output.

matplotlib is imported lazily so commands that do not plot stay fast.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_odds_vs_epsilon_figure(rows: Sequence[dict], path: Path) -> None:
    """Line chart of the display odds (x, y) across privacy budgets.

    ``rows`` are the table-command rows: dicts with epsilon, x, y.
    """
    plt = _pyplot()
    eps = [row["epsilon"] for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(eps, [row["x"] for row in rows], "o-", color="#BAB0AC",
            label="withhold: concluded anyway (x)")
    ax.plot(eps, [row["y"] for row in rows], "o-", color="#4E79A7",
            label="share: concluded (y)")
    ax.set_xscale("log")
    ax.set_xlabel("privacy budget (epsilon)")
    denominator = rows[0]["denominator"] if rows else 100
    ax.set_ylabel(f"out of {denominator} potential outputs")
    ax.set_title("Adversary conclusions vs. privacy budget")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_simulation_figure(result: dict, path: Path) -> None:
    """Bar chart comparing closed-form and empirical branch probabilities."""
    plt = _pyplot()
    labels = ["p_without", "p_with"]
    closed = [result["closed_form"]["p_without"], result["closed_form"]["p_with"]]
    empirical = [result["empirical"]["p_without"], result["empirical"]["p_with"]]
    fig, ax = plt.subplots(figsize=(6, 4))
    positions = range(len(labels))
    width = 0.35
    ax.bar([p - width / 2 for p in positions], closed, width,
           label="closed form", color="#4E79A7")
    ax.bar([p + width / 2 for p in positions], empirical, width,
           label=f"empirical ({result['trials']:,} trials)", color="#F28E2B")
    ax.set_xticks(list(positions))
    ax.set_xticklabels(labels)
    ax.set_ylabel("probability")
    ax.set_title(f"Monte Carlo check, epsilon={result['epsilon']:g}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
