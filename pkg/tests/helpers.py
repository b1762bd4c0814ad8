"""Shared test utilities: SVG inspection and independent statistical oracles."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

_SVG_NS = "{http://www.w3.org/2000/svg}"

HIGHLIGHT = "#4E79A7"
MUTED = "#BAB0AC"


def icon_fills_by_panel(svg_text: str) -> dict[str, list[str]]:
    """Fill attributes of every icon element, keyed by panel id, in document order."""
    root = ET.fromstring(svg_text)
    panels: dict[str, list[str]] = {}
    for group in root.iter(f"{_SVG_NS}g"):
        fills = [
            el.get("fill")
            for el in group
            if el.tag in (f"{_SVG_NS}circle", f"{_SVG_NS}rect")
        ]
        panels[group.get("id")] = fills
    return panels


def highlighted_counts(svg_text: str) -> dict[str, int]:
    return {
        panel: sum(1 for f in fills if f == HIGHLIGHT)
        for panel, fills in icon_fills_by_panel(svg_text).items()
    }


def icon_positions_by_panel(svg_text: str) -> dict[str, list[tuple[float, float, str]]]:
    """(cx, cy, fill) triples per panel, document order (circles only)."""
    root = ET.fromstring(svg_text)
    panels: dict[str, list[tuple[float, float, str]]] = {}
    for group in root.iter(f"{_SVG_NS}g"):
        panels[group.get("id")] = [
            (float(el.get("cx")), float(el.get("cy")), el.get("fill"))
            for el in group
            if el.tag == f"{_SVG_NS}circle"
        ]
    return panels


def ks_critical_value(n: int, alpha: float = 0.001) -> float:
    """Two-sided Kolmogorov-Smirnov critical value, asymptotic form."""
    return math.sqrt(-math.log(alpha / 2.0) / 2.0) / math.sqrt(n)


def laplace_cdf_oracle(mu: float, b: float):
    """Analytic CDF as a plain closure, independent of the package code path."""

    def cdf(r):
        import numpy as np

        r = np.asarray(r, dtype=float)
        z = (r - mu) / b
        return np.where(z < 0, 0.5 * np.exp(z), 1.0 - 0.5 * np.exp(-z))

    return cdf


def bisect_posterior_threshold(posterior, lo: float, hi: float, iters: int = 80) -> float:
    """Independent bisection oracle: the r where posterior(r) crosses 1/2.

    ``posterior`` must be nondecreasing on [lo, hi] with posterior(lo) <= 0.5
    <= posterior(hi).
    """
    assert posterior(lo) <= 0.5 <= posterior(hi)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if posterior(mid) <= 0.5:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
