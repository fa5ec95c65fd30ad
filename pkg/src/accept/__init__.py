"""Acceptability curves for two-arm binary trials.

Turns trial results (success counts or a published estimate with CI) into
the probability that the true treatment difference exceeds any threshold,
via a Bayesian logistic model or a frequentist confidence curve.
"""

__version__ = "0.1.0"

from .bayes import (NaturalDraws, PosteriorDraws, PriorSpec, PriorSummary,
                    SamplerConfig, default_priors, draws_to_natural,
                    log_posterior, sample_posterior, split_rhat,
                    summarize_prior)
from .curve import (DEFAULT_THRESHOLDS, AcceptabilityCurve, AcceptabilityTable,
                    CurveSource, PercentileMarkers, acceptability_curve,
                    acceptability_value, format_percent_2sf,
                    percentile_markers, prob_between, threshold_table)
from .freq import (FreqFit, confidence_curve_value, confidence_interval,
                   fit_two_arm, risk_difference)
from .model import (ArmCount, EffectSummary, NormalEffect, TrialSpec,
                    ValidatedTrial, summary_to_normal, validate_trial)

__all__ = [
    "__version__",
    "ArmCount", "TrialSpec", "ValidatedTrial", "EffectSummary", "NormalEffect",
    "validate_trial", "summary_to_normal",
    "FreqFit", "fit_two_arm", "risk_difference", "confidence_interval",
    "confidence_curve_value",
    "PriorSpec", "SamplerConfig", "PosteriorDraws", "NaturalDraws",
    "PriorSummary", "default_priors", "log_posterior", "sample_posterior",
    "draws_to_natural", "summarize_prior", "split_rhat",
    "CurveSource", "AcceptabilityCurve", "PercentileMarkers",
    "AcceptabilityTable", "DEFAULT_THRESHOLDS", "acceptability_value",
    "acceptability_curve", "percentile_markers", "threshold_table",
    "prob_between", "format_percent_2sf",
]
