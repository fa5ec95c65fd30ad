"""Frequentist path: saturated two-arm logistic fit and confidence curve.

The saturated model has one parameter per arm, so the MLE is closed form
(observed proportions) and the delta-method average marginal effect reduces
to the two-proportion Wald risk difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateArm
from .model import NormalEffect, ValidatedTrial
from .stats import Z_95, logit, normal_cdf


@dataclass(frozen=True)
class FreqFit:
    """ML fit of the two-parameter logistic model.

    intercept_logit is the control-arm log-odds; effect_logit the treatment
    log-odds-ratio; cov their 2x2 covariance from inverse Fisher information.
    """

    intercept_logit: float
    effect_logit: float
    cov: tuple[tuple[float, float], tuple[float, float]]


def _check_nondegenerate(trial: ValidatedTrial) -> None:
    for arm in (trial.spec.control, trial.spec.treatment):
        if arm.successes == 0 or arm.successes == arm.n:
            raise DegenerateArm(
                f"arm {arm.label!r} has {arm.successes}/{arm.n} successes: the "
                "maximum-likelihood estimate diverges; use the Bayesian path or "
                "summary mode instead")


def fit_two_arm(trial: ValidatedTrial) -> FreqFit:
    """Closed-form MLE of the saturated two-arm logistic model."""
    _check_nondegenerate(trial)
    p_c = trial.control_rate
    p_t = trial.treatment_rate
    n_c = trial.spec.control.n
    n_t = trial.spec.treatment.n
    intercept = logit(p_c)
    effect = logit(p_t) - intercept
    # arms are independent: Var(intercept) = 1/I_c, Var(intercept+effect) = 1/I_t
    v_c = 1.0 / (n_c * p_c * (1.0 - p_c))
    v_t = 1.0 / (n_t * p_t * (1.0 - p_t))
    cov = ((v_c, -v_c), (-v_c, v_c + v_t))
    return FreqFit(intercept_logit=intercept, effect_logit=effect, cov=cov)


def risk_difference(trial: ValidatedTrial) -> NormalEffect:
    """Wald risk difference in percentage points with its standard error."""
    _check_nondegenerate(trial)
    p_c = trial.control_rate
    p_t = trial.treatment_rate
    n_c = trial.spec.control.n
    n_t = trial.spec.treatment.n
    mean_pp = 100.0 * (p_t - p_c)
    se_pp = 100.0 * math.sqrt(p_c * (1.0 - p_c) / n_c + p_t * (1.0 - p_t) / n_t)
    return NormalEffect(mean_pp=mean_pp, se_pp=se_pp)


def confidence_interval(effect: NormalEffect, level: float = 0.95) -> tuple[float, float]:
    from .stats import normal_quantile
    z = Z_95 if level == 0.95 else normal_quantile(0.5 * (1.0 + level))
    return (effect.mean_pp - z * effect.se_pp, effect.mean_pp + z * effect.se_pp)


def confidence_curve_value(effect: NormalEffect, threshold_pp: float) -> float:
    """Probability under the normal approximation that the true difference
    exceeds the threshold (the one-sided p-value for effect > threshold)."""
    return normal_cdf((effect.mean_pp - threshold_pp) / effect.se_pp)
