"""Analysis orchestration: request schema, engine dispatch, result bundles.

The same AnalysisRequest JSON schema serves the CLI, the HTTP service, and
the browser UI. Bundles serialize canonically (sorted keys, floats fixed at
6 decimals) so identical requests with identical seeds produce byte-identical
JSON.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import __version__
from .bayes import (PriorSpec, SamplerConfig, default_priors, draws_to_natural,
                    sample_posterior)
from .curve import (DEFAULT_THRESHOLDS, CurveSource, acceptability_curve,
                    percentile_markers, threshold_table)
from .errors import TooManyCurves, ValidationError
from .freq import confidence_interval, risk_difference
from .model import (ArmCount, EffectSummary, NormalEffect, TrialSpec,
                    summary_to_normal, validate_trial)

DEFAULT_SEED = 7

MODES = ("bayes", "freq", "both")


@dataclass(frozen=True)
class TrialEntry:
    """One trial in a request: counts-based or summary-based."""

    name: str
    spec: TrialSpec | None = None          # counts mode
    summary: EffectSummary | None = None   # summary mode
    unacceptable_difference_pp: float | None = None
    expected_difference_pp: float | None = None


@dataclass(frozen=True)
class AnalysisRequest:
    trials: tuple  # 1-3 TrialEntry
    mode: str = "both"
    thresholds: tuple | None = None
    sampler: SamplerConfig = SamplerConfig(seed=DEFAULT_SEED)


def _require(cond: bool, message: str, field_path: str | None = None) -> None:
    if not cond:
        raise ValidationError(message, field_path=field_path)


def _parse_arm(obj, path: str) -> ArmCount:
    _require(isinstance(obj, dict), f"{path} must be an object", path)
    for key in ("label", "n", "successes"):
        _require(key in obj, f"{path}.{key} is required", f"{path}.{key}")
    _require(isinstance(obj["label"], str), f"{path}.label must be a string",
             f"{path}.label")
    for key in ("n", "successes"):
        _require(isinstance(obj[key], int) and not isinstance(obj[key], bool),
                 f"{path}.{key} must be an integer", f"{path}.{key}")
    return ArmCount(label=obj["label"], n=obj["n"], successes=obj["successes"])


def _parse_trial(obj, path: str) -> TrialEntry:
    _require(isinstance(obj, dict), f"{path} must be an object", path)
    _require(isinstance(obj.get("name"), str) and obj["name"],
             f"{path}.name must be a non-empty string", f"{path}.name")
    name = obj["name"]
    unacceptable = obj.get("unacceptable_difference_pp")
    expected = obj.get("expected_difference_pp")
    for key, val in (("unacceptable_difference_pp", unacceptable),
                     ("expected_difference_pp", expected)):
        _require(val is None or isinstance(val, (int, float)),
                 f"{path}.{key} must be a number", f"{path}.{key}")

    has_counts = "counts" in obj
    has_summary = "summary" in obj
    _require(has_counts != has_summary,
             f"{path} must have exactly one of 'counts' or 'summary'", path)

    if has_counts:
        counts = obj["counts"]
        _require(isinstance(counts, dict), f"{path}.counts must be an object",
                 f"{path}.counts")
        spec = TrialSpec(
            name=name,
            control=_parse_arm(counts.get("control"), f"{path}.counts.control"),
            treatment=_parse_arm(counts.get("treatment"), f"{path}.counts.treatment"),
            unacceptable_difference_pp=unacceptable,
            expected_difference_pp=expected,
            assumed_control_rate=obj.get("assumed_control_rate"),
        )
        validate_trial(spec)
        return TrialEntry(name=name, spec=spec, unacceptable_difference_pp=unacceptable,
                          expected_difference_pp=expected)

    s = obj["summary"]
    _require(isinstance(s, dict), f"{path}.summary must be an object", f"{path}.summary")
    for key in ("estimate_pp", "ci_lower_pp", "ci_upper_pp"):
        _require(isinstance(s.get(key), (int, float)),
                 f"{path}.summary.{key} must be a number", f"{path}.summary.{key}")
    summary = EffectSummary(
        estimate_pp=float(s["estimate_pp"]),
        ci_lower_pp=float(s["ci_lower_pp"]),
        ci_upper_pp=float(s["ci_upper_pp"]),
        ci_level=float(s.get("ci_level", 0.95)),
    )
    return TrialEntry(name=name, summary=summary,
                      unacceptable_difference_pp=unacceptable,
                      expected_difference_pp=expected)


def parse_request(obj) -> AnalysisRequest:
    """Validate a decoded JSON object against the AnalysisRequest schema."""
    _require(isinstance(obj, dict), "request body must be a JSON object", "")
    trials_raw = obj.get("trials")
    _require(isinstance(trials_raw, list) and len(trials_raw) >= 1,
             "trials must be a non-empty array", "trials")
    if len(trials_raw) > 3:
        raise TooManyCurves(
            f"at most 3 trials per analysis, got {len(trials_raw)}",
            field_path="trials")

    mode = obj.get("mode", "both")
    _require(mode in MODES, f"mode must be one of {MODES}, got {mode!r}", "mode")

    trials = tuple(_parse_trial(t, f"trials[{i}]") for i, t in enumerate(trials_raw))
    if mode in ("bayes", "both"):
        for i, t in enumerate(trials):
            _require(t.spec is not None,
                     f"trial {t.name!r} is summary-only: the Bayesian path needs "
                     "counts, use mode 'freq'", f"trials[{i}]")

    thresholds = obj.get("thresholds")
    if thresholds is not None:
        _require(isinstance(thresholds, list) and
                 all(isinstance(t, (int, float)) for t in thresholds),
                 "thresholds must be an array of numbers", "thresholds")
        thresholds = tuple(float(t) for t in thresholds)

    sampler_kwargs = {"seed": DEFAULT_SEED}
    sampler_raw = obj.get("sampler", {})
    _require(isinstance(sampler_raw, dict), "sampler must be an object", "sampler")
    allowed = {"chains", "warmup_iterations", "kept_iterations_per_chain",
               "seed", "target_acceptance", "rhat_limit", "rhat_action", "thin"}
    for key, val in sampler_raw.items():
        _require(key in allowed, f"unknown sampler option {key!r}", f"sampler.{key}")
        sampler_kwargs[key] = val
    if "seed" in obj:
        _require(isinstance(obj["seed"], int), "seed must be an integer", "seed")
        sampler_kwargs["seed"] = obj["seed"]
    try:
        sampler = SamplerConfig(**sampler_kwargs)
    except TypeError as exc:
        raise ValidationError(f"bad sampler config: {exc}", field_path="sampler")

    return AnalysisRequest(trials=trials, mode=mode, thresholds=thresholds,
                           sampler=sampler)


def _table_thresholds(entry: TrialEntry, requested) -> tuple:
    thresholds = list(requested if requested is not None else DEFAULT_THRESHOLDS)
    unacceptable = entry.unacceptable_difference_pp
    if unacceptable is not None and float(unacceptable) not in [float(t) for t in thresholds]:
        thresholds.append(float(unacceptable))
        thresholds.sort()
    return tuple(thresholds)


def _curve_dict(curve) -> dict:
    return {"trial_name": curve.trial_name, "source": curve.source,
            "points": [[t, v] for t, v in curve.points]}


def _markers_dict(m) -> dict:
    return {"lower": list(m.lower), "median": list(m.median), "upper": list(m.upper)}


def _table_dict(table) -> dict:
    return {"rows": [{"acceptability_threshold": t, "probability": p, "formatted": s}
                     for t, p, s in table.rows]}


def _side(src: CurveSource, entry: TrialEntry, thresholds) -> dict:
    return {
        "curve": _curve_dict(acceptability_curve(src, trial_name=entry.name)),
        "markers": _markers_dict(percentile_markers(src)),
        "table": _table_dict(threshold_table(src, _table_thresholds(entry, thresholds))),
    }


def run_analyze(request: AnalysisRequest) -> dict:
    """Dispatch to the engines and assemble the bundle (a JSON-ready dict)."""
    import numpy as np

    trials_out = []
    for entry in request.trials:
        trial_out: dict = {"name": entry.name}
        if entry.unacceptable_difference_pp is not None:
            trial_out["unacceptable_difference_pp"] = entry.unacceptable_difference_pp
        if entry.expected_difference_pp is not None:
            trial_out["expected_difference_pp"] = entry.expected_difference_pp

        freq_src = bayes_src = None
        if request.mode in ("freq", "both"):
            if entry.spec is not None:
                effect = risk_difference(validate_trial(entry.spec))
            else:
                effect = summary_to_normal(entry.summary)
            freq_src = CurveSource.from_effect(effect)
            side = _side(freq_src, entry, request.thresholds)
            side["effect"] = {"mean_pp": effect.mean_pp, "se_pp": effect.se_pp}
            side["ci95"] = list(confidence_interval(effect))
            trial_out["freq"] = side

        if request.mode in ("bayes", "both"):
            trial = validate_trial(entry.spec)
            priors = default_priors(trial.assumed_control_rate)
            draws = sample_posterior(trial, priors, request.sampler)
            natural = draws_to_natural(draws)
            bayes_src = CurveSource.from_draws(natural)
            side = _side(bayes_src, entry, request.thresholds)
            q = np.quantile(natural.diff_pp, [0.025, 0.5, 0.975])
            side["summary"] = {
                "mean_pp": float(natural.diff_pp.mean()),
                "median_pp": float(q[1]),
                "central95": [float(q[0]), float(q[2])],
            }
            side["priors"] = asdict(priors)
            side["diagnostics"] = {
                "split_rhat": draws.rhat,
                "acceptance_rates": list(draws.acceptance_rates),
            }
            trial_out["bayes"] = side

        if request.mode == "both":
            ts = _table_thresholds(entry, request.thresholds)
            diffs = [abs(acceptability_value_at(bayes_src, t) -
                         acceptability_value_at(freq_src, t)) * 100.0 for t in ts]
            trial_out["agreement"] = {
                "thresholds": list(ts),
                "abs_diff_pp": diffs,
                "max_abs_diff_pp": max(diffs),
            }
        trials_out.append(trial_out)

    return {
        "software_version": __version__,
        "mode": request.mode,
        "seed": request.sampler.seed,
        "sampler": asdict(request.sampler),
        "request": request_echo(request),
        "trials": trials_out,
    }


def acceptability_value_at(src: CurveSource, t: float) -> float:
    from .curve import acceptability_value
    return acceptability_value(src, t)


def request_echo(request: AnalysisRequest) -> dict:
    """Input echo sufficient to reproduce the run."""
    trials = []
    for e in request.trials:
        t: dict = {"name": e.name}
        if e.spec is not None:
            t["counts"] = {
                "control": asdict(e.spec.control),
                "treatment": asdict(e.spec.treatment),
            }
            if e.spec.assumed_control_rate is not None:
                t["assumed_control_rate"] = e.spec.assumed_control_rate
        else:
            t["summary"] = asdict(e.summary)
        if e.unacceptable_difference_pp is not None:
            t["unacceptable_difference_pp"] = e.unacceptable_difference_pp
        if e.expected_difference_pp is not None:
            t["expected_difference_pp"] = e.expected_difference_pp
        trials.append(t)
    out = {"trials": trials, "mode": request.mode}
    if request.thresholds is not None:
        out["thresholds"] = list(request.thresholds)
    return out


def _canonical(obj):
    """Round floats to 6 decimals recursively for stable serialization."""
    if isinstance(obj, float):
        return round(obj, 6)
    if isinstance(obj, dict):
        return {k: _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    return obj


def bundle_to_json(bundle: dict) -> str:
    """Canonical bundle JSON: sorted keys, floats at 6 decimals."""
    return json.dumps(_canonical(bundle), sort_keys=True, indent=2,
                      ensure_ascii=False) + "\n"
