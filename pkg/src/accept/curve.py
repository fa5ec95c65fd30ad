"""Acceptability curves, tables, markers, and the signif-2 percent formatter.

A curve source is either empirical (posterior draws of the difference in
percentage points) or analytic (a normal effect); the acceptability value at
a threshold t is the probability that the true difference exceeds t.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal

import numpy as np

from .bayes import NaturalDraws
from .errors import BadGrid, BadInterval, EmptyDraws
from .freq import confidence_curve_value
from .model import NormalEffect
from .stats import normal_quantile

DEFAULT_THRESHOLDS = (-12.0, -10.0, -5.0, 0.0, 5.0, 10.0, 12.0)


@dataclass(frozen=True)
class CurveSource:
    """Empirical (draws) or analytic (normal effect) source of a curve."""

    tag: str  # "bayes" | "freq"
    draws_pp: np.ndarray | None = None  # sorted ascending
    effect: NormalEffect | None = None

    @classmethod
    def from_draws(cls, draws, tag: str = "bayes") -> "CurveSource":
        if isinstance(draws, NaturalDraws):
            draws = draws.diff_pp
        arr = np.sort(np.asarray(draws, dtype=np.float64))
        if arr.size == 0:
            raise EmptyDraws("empirical curve source needs at least one draw")
        return cls(tag=tag, draws_pp=arr)

    @classmethod
    def from_effect(cls, effect: NormalEffect, tag: str = "freq") -> "CurveSource":
        return cls(tag=tag, effect=effect)

    @property
    def is_empirical(self) -> bool:
        return self.draws_pp is not None


@dataclass(frozen=True)
class AcceptabilityCurve:
    trial_name: str
    points: tuple  # ((threshold_pp, value), ...) thresholds strictly increasing
    source: str

    @property
    def thresholds(self) -> np.ndarray:
        return np.array([p[0] for p in self.points])

    @property
    def values(self) -> np.ndarray:
        return np.array([p[1] for p in self.points])


@dataclass(frozen=True)
class PercentileMarkers:
    """(threshold, value) pairs at acceptability values 0.975, 0.5, 0.025."""

    lower: tuple[float, float]
    median: tuple[float, float]
    upper: tuple[float, float]


@dataclass(frozen=True)
class AcceptabilityTable:
    rows: tuple  # ((threshold_pp, probability, formatted), ...)


def format_percent_2sf(p: float) -> str:
    """Format a probability as a percentage rounded to 2 significant figures
    (round-half-even), with trailing zeros dropped."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    x = p * 100.0
    if x == 0.0:
        return "0%"
    d = Decimal(x)
    q = d.quantize(Decimal((0, (1,), d.adjusted() - 1)), rounding=ROUND_HALF_EVEN)
    return format(q.normalize(), "f") + "%"


def acceptability_value(src: CurveSource, threshold_pp: float) -> float:
    """P(true difference > threshold): one minus the ECDF for draws, or the
    confidence-curve value for an analytic source."""
    if src.is_empirical:
        n = src.draws_pp.size
        return float(n - np.searchsorted(src.draws_pp, threshold_pp, side="right")) / n
    return confidence_curve_value(src.effect, threshold_pp)


def acceptability_curve(src: CurveSource, grid=None,
                        trial_name: str = "") -> AcceptabilityCurve:
    """Curve over a threshold grid.

    Default grid: analytic sources get 401 evenly spaced thresholds over
    mean +/- 4 se; empirical sources use the sorted unique draw values (the
    exact step-function representation).
    """
    if grid is not None:
        grid = np.asarray(grid, dtype=np.float64)
        if grid.ndim != 1 or grid.size == 0 or not np.all(np.diff(grid) > 0):
            raise BadGrid("grid must be a non-empty strictly increasing sequence")
    elif src.is_empirical:
        grid = np.unique(src.draws_pp)
    else:
        e = src.effect
        grid = np.linspace(e.mean_pp - 4.0 * e.se_pp, e.mean_pp + 4.0 * e.se_pp, 401)

    if src.is_empirical:
        n = src.draws_pp.size
        values = (n - np.searchsorted(src.draws_pp, grid, side="right")) / n
    else:
        from .stats import normal_cdf_vec
        values = normal_cdf_vec((src.effect.mean_pp - grid) / src.effect.se_pp)

    points = tuple((float(t), float(v)) for t, v in zip(grid, values))
    return AcceptabilityCurve(trial_name=trial_name, points=points, source=src.tag)


def percentile_markers(src: CurveSource) -> PercentileMarkers:
    """Markers at the 2.5th, 50th, and 97.5th percentiles of the difference
    distribution, paired with acceptability values 0.975, 0.5, 0.025."""
    if src.is_empirical:
        q = np.quantile(src.draws_pp, [0.025, 0.5, 0.975])  # type-7 interpolation
        t_lo, t_med, t_hi = (float(v) for v in q)
    else:
        e = src.effect
        z = normal_quantile(0.975)
        t_lo, t_med, t_hi = e.mean_pp - z * e.se_pp, e.mean_pp, e.mean_pp + z * e.se_pp
    return PercentileMarkers(lower=(t_lo, 0.975), median=(t_med, 0.5),
                             upper=(t_hi, 0.025))


def threshold_table(src: CurveSource, thresholds=DEFAULT_THRESHOLDS) -> AcceptabilityTable:
    """One row per threshold: probability and its signif-2 formatted percent."""
    rows = []
    for t in thresholds:
        t = float(t)
        if not np.isfinite(t):
            raise BadGrid(f"thresholds must be finite, got {t}")
        p = acceptability_value(src, t)
        rows.append((t, p, format_percent_2sf(p)))
    return AcceptabilityTable(rows=tuple(rows))


def prob_between(src: CurveSource, t_lo: float, t_hi: float) -> float:
    """Probability that the true difference lies in (t_lo, t_hi]."""
    if not t_lo < t_hi:
        raise BadInterval(f"need t_lo < t_hi, got ({t_lo}, {t_hi})")
    return acceptability_value(src, t_lo) - acceptability_value(src, t_hi)
