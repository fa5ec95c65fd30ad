"""Core domain types: trial counts, effect summaries, and validation.

Differences are always treatment minus control, in percentage points, so
positive values favour the treatment arm.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

from .errors import (AsymmetricIntervalWarning, BadInterval, BadRate,
                     DuplicateArmLabels, InvalidCounts)
from .stats import normal_quantile


@dataclass(frozen=True)
class ArmCount:
    """One trial arm: participants and favourable outcomes."""

    label: str
    n: int
    successes: int

    @property
    def proportion(self) -> float:
        return self.successes / self.n


@dataclass(frozen=True)
class TrialSpec:
    """Two-arm binary trial with optional pre-specified differences (pp)."""

    name: str
    control: ArmCount
    treatment: ArmCount
    unacceptable_difference_pp: float | None = None
    expected_difference_pp: float | None = None
    assumed_control_rate: float | None = None


@dataclass(frozen=True)
class ValidatedTrial:
    """A TrialSpec that passed validation, with observed proportions attached."""

    spec: TrialSpec
    control_rate: float
    treatment_rate: float

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def assumed_control_rate(self) -> float:
        """Explicit assumed rate if given, else the observed control proportion."""
        if self.spec.assumed_control_rate is not None:
            return self.spec.assumed_control_rate
        return self.control_rate


@dataclass(frozen=True)
class EffectSummary:
    """Published risk-difference estimate with a symmetric Wald CI (pp)."""

    estimate_pp: float
    ci_lower_pp: float
    ci_upper_pp: float
    ci_level: float = 0.95


@dataclass(frozen=True)
class NormalEffect:
    """Normal approximation of the risk difference in percentage points."""

    mean_pp: float
    se_pp: float

    def __post_init__(self):
        if not self.se_pp > 0:
            raise BadRate(f"se_pp must be positive, got {self.se_pp}")


def _check_arm(arm: ArmCount, path: str) -> None:
    if not arm.label:
        raise InvalidCounts("arm label must be non-empty", field_path=f"{path}.label")
    if arm.n < 1:
        raise InvalidCounts(f"arm {arm.label!r}: n must be >= 1, got {arm.n}",
                            field_path=f"{path}.n")
    if not 0 <= arm.successes <= arm.n:
        raise InvalidCounts(
            f"arm {arm.label!r}: successes must be in [0, n], got {arm.successes}/{arm.n}",
            field_path=f"{path}.successes")


def validate_trial(spec: TrialSpec) -> ValidatedTrial:
    """Check structural invariants and attach observed proportions.

    Idempotent in the sense that re-validating the embedded spec returns an
    equal ValidatedTrial.
    """
    _check_arm(spec.control, "control")
    _check_arm(spec.treatment, "treatment")
    if spec.control.label == spec.treatment.label:
        raise DuplicateArmLabels(f"arm labels must differ, both are {spec.control.label!r}")
    if spec.assumed_control_rate is not None and not 0.0 < spec.assumed_control_rate < 1.0:
        raise BadRate(
            f"assumed_control_rate must be strictly inside (0, 1), got {spec.assumed_control_rate}",
            field_path="assumed_control_rate")
    return ValidatedTrial(
        spec=spec,
        control_rate=spec.control.proportion,
        treatment_rate=spec.treatment.proportion,
    )


def summary_to_normal(s: EffectSummary) -> NormalEffect:
    """Convert a published estimate + CI to a normal effect.

    Assumes a symmetric Wald interval; asymmetry beyond 10% of the half-width
    is warned about but the half-width is still used (published Bayesian
    intervals are mildly asymmetric yet usable).
    """
    if not 0.0 < s.ci_level < 1.0:
        raise BadRate(f"ci_level must be in (0, 1), got {s.ci_level}", field_path="ci_level")
    if not s.ci_lower_pp < s.estimate_pp < s.ci_upper_pp:
        raise BadInterval(
            f"CI must bracket the estimate: lower {s.ci_lower_pp} < estimate "
            f"{s.estimate_pp} < upper {s.ci_upper_pp} violated")
    half_width = (s.ci_upper_pp - s.ci_lower_pp) / 2.0
    asym = abs((s.ci_upper_pp - s.estimate_pp) - (s.estimate_pp - s.ci_lower_pp))
    if asym > 0.1 * half_width:
        warnings.warn(
            f"interval ({s.ci_lower_pp}, {s.ci_upper_pp}) is asymmetric about "
            f"{s.estimate_pp} by more than 10% of the half-width; treating as symmetric",
            AsymmetricIntervalWarning)
    z = normal_quantile(0.5 * (1.0 + s.ci_level))
    return NormalEffect(mean_pp=s.estimate_pp, se_pp=half_width / z)


def with_assumed_rate(trial: ValidatedTrial, rate: float) -> ValidatedTrial:
    """Return a copy of the trial with an explicit assumed control rate."""
    if not 0.0 < rate < 1.0:
        raise BadRate(f"rate must be in (0, 1), got {rate}")
    return validate_trial(replace(trial.spec, assumed_control_rate=rate))
