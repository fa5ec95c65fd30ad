"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import json
import time

import numpy as np
import pytest

from accept.bayes import (SamplerConfig, default_priors, draws_to_natural,
                          sample_posterior, summarize_prior)
from accept.bundle import bundle_to_json, parse_request, run_analyze
from accept.curve import (CurveSource, acceptability_value, format_percent_2sf,
                          threshold_table)
from accept.freq import confidence_curve_value, confidence_interval, risk_difference
from accept.model import validate_trial
from conftest import EARNEST, SECOND_LINE, request_dict

SEED = 7


def _report(criterion, ok):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {criterion} failed"


def _bayes_diffs(spec, rate, seed=SEED):
    trial = validate_trial(spec)
    draws = sample_posterior(trial, default_priors(rate), SamplerConfig(seed=seed))
    return draws_to_natural(draws).diff_pp


def test_criterion_1_frequentist_reproduction():
    start = time.perf_counter()
    checks = []
    for spec, mean, lo, hi in ((EARNEST, 4.1, -2.4, 10.6),
                               (SECOND_LINE, 1.8, -4.7, 8.3)):
        eff = risk_difference(validate_trial(spec))
        ci = confidence_interval(eff)
        checks += [abs(eff.mean_pp - mean) <= 0.05,
                   abs(ci[0] - lo) <= 0.05,
                   abs(ci[1] - hi) <= 0.05]
    elapsed = time.perf_counter() - start
    _report("1 frequentist reproduction", all(checks) and elapsed < 1.0)


def test_criterion_2_bayesian_reproduction():
    start = time.perf_counter()
    checks = []
    for spec, rate, mean, lo, hi in ((EARNEST, 0.75, 4.1, -2.3, 10.6),
                                     (SECOND_LINE, 0.80, 1.7, -5.1, 8.4)):
        diffs = _bayes_diffs(spec, rate)
        checks.append(len(diffs) == 4000)
        q = np.quantile(diffs, [0.025, 0.975])
        checks += [abs(diffs.mean() - mean) <= 0.3,
                   abs(q[0] - lo) <= 0.4,
                   abs(q[1] - hi) <= 0.4]
    elapsed = time.perf_counter() - start
    _report("2 bayesian reproduction", all(checks) and elapsed < 30.0)


def test_criterion_3_headline_acceptability_values():
    checks = []
    for spec, rate, targets in (
            (EARNEST, 0.75, {0.0: (0.89, 0.015), 5.0: (0.39, 0.02)}),
            (SECOND_LINE, 0.80, {0.0: (0.70, 0.015), -5.0: (0.97, 0.015),
                                 5.0: (0.16, 0.025)})):
        diffs = _bayes_diffs(spec, rate)
        bayes_src = CurveSource.from_draws(diffs)
        eff = risk_difference(validate_trial(spec))
        for t, (target, tol) in targets.items():
            bayes_val = acceptability_value(bayes_src, t)
            checks.append(abs(bayes_val - target) <= tol)
            checks.append(abs(confidence_curve_value(eff, t) - bayes_val) <= 0.02)
        if spec is EARNEST:
            checks.append(acceptability_value(bayes_src, -5.0) >= 0.99)
            checks.append(confidence_curve_value(eff, -5.0) >= 0.99)
    _report("3 headline acceptability values", all(checks))


def test_criterion_4_prior_summaries():
    start = time.perf_counter()
    s = summarize_prior(default_priors(0.75), 1_000_000, seed=1)
    c, d = s.control_rate, s.difference
    checks = [abs(c["median"] - 75) <= 1, abs(c["mean"] - 66) <= 1,
              abs(c["iqr"][0] - 44) <= 1, abs(c["iqr"][1] - 92) <= 1,
              abs(c["central95"][0] - 6) <= 1, abs(c["central95"][1] - 99) <= 1,
              abs(d["median"] - 0) <= 1, abs(d["mean"] - -10) <= 1,
              abs(d["iqr"][0] - -50) <= 2, abs(d["iqr"][1] - 19) <= 2]
    s2 = summarize_prior(default_priors(0.80), 1_000_000, seed=1)
    c2 = s2.control_rate
    checks += [abs(c2["median"] - 80) <= 1, abs(c2["mean"] - 70) <= 1,
               abs(c2["iqr"][0] - 51) <= 1, abs(c2["iqr"][1] - 94) <= 1]
    elapsed = time.perf_counter() - start
    _report("4 prior summaries", all(checks) and elapsed < 10.0)


def test_criterion_5_property_suite():
    checks = []
    rng = np.random.default_rng(20240824)

    # curve monotonicity on random sources
    for _ in range(10):
        src = CurveSource.from_draws(rng.normal(rng.uniform(-5, 5), 2, 300))
        ts = np.sort(rng.uniform(-15, 15, 40))
        vals = [acceptability_value(src, t) for t in ts]
        checks.append(all(a >= b for a, b in zip(vals, vals[1:])))

    # freq value exactly 0.5 at the point estimate
    eff = risk_difference(validate_trial(EARNEST))
    checks.append(abs(confidence_curve_value(eff, eff.mean_pp) - 0.5) < 1e-12)

    # shift equivariance
    draws = rng.normal(1.0, 2.0, 1000)
    src = CurveSource.from_draws(draws)
    shifted = CurveSource.from_draws(draws + 3.5)
    checks.append(all(acceptability_value(shifted, t + 3.5) ==
                      acceptability_value(src, t) for t in (-2.0, 0.0, 1.7)))

    # arm-swap antisymmetry
    from accept.model import ArmCount, TrialSpec
    fwd = risk_difference(validate_trial(
        TrialSpec("f", ArmCount("a", 426, 255), ArmCount("b", 433, 277))))
    rev = risk_difference(validate_trial(
        TrialSpec("r", ArmCount("b", 433, 277), ArmCount("a", 426, 255))))
    checks.append(abs(rev.mean_pp + fwd.mean_pp) < 1e-12)
    checks.append(all(abs(confidence_curve_value(rev, -t) -
                          (1 - confidence_curve_value(fwd, t))) < 1e-12
                      for t in (-5.0, 0.0, 5.0)))

    # ECDF vs analytic sup gap at 1e5 draws
    mu, sigma = 0.7, 1.9
    big = CurveSource.from_draws(rng.normal(mu, sigma, 100_000))
    from accept.stats import normal_cdf
    gap = max(abs(acceptability_value(big, t) - normal_cdf((mu - t) / sigma))
              for t in np.linspace(mu - 4 * sigma, mu + 4 * sigma, 101))
    checks.append(gap <= 0.01)

    # posterior interval shrinkage on count doubling
    base = TrialSpec("t", ArmCount("c", 426, 255), ArmCount("t", 433, 277))
    double = TrialSpec("t", ArmCount("c", 852, 510), ArmCount("t", 866, 554))
    widths = []
    for spec in (base, double):
        diffs = _bayes_diffs(spec, 0.75, seed=13)
        lo, hi = np.quantile(diffs, [0.025, 0.975])
        widths.append(hi - lo)
    checks.append(0.65 <= widths[1] / widths[0] <= 0.75)

    # determinism: same seed, byte-identical bundle JSON
    req = parse_request(request_dict(seed=SEED))
    checks.append(bundle_to_json(run_analyze(req)) == bundle_to_json(run_analyze(req)))

    _report("5 property suite", all(checks))


def test_criterion_6_formatting():
    from decimal import Decimal

    def oracle(p):
        x = p * 100.0
        if x == 0.0:
            return "0%"
        mantissa, exponent = f"{x:.1e}".split("e")
        return format(Decimal(mantissa).scaleb(int(exponent)).normalize(), "f") + "%"

    rng = np.random.default_rng(6)
    cases = [0.0, 1.0, 0.995, 0.00499] + list(rng.random(156)) \
        + list(10.0 ** rng.uniform(-6, -0.001, 40))
    checks = [len(cases) >= 200]
    checks += [format_percent_2sf(float(p)) == oracle(float(p)) for p in cases]

    # table formatted column equals formatter applied to probability column
    for spec in (EARNEST, SECOND_LINE):
        src = CurveSource.from_effect(risk_difference(validate_trial(spec)))
        table = threshold_table(src)
        checks += [s == format_percent_2sf(p) for _, p, s in table.rows]
    _report("6 formatting", all(checks))


def test_criterion_7_interfaces(tmp_path):
    from click.testing import CliRunner
    from fastapi.testclient import TestClient
    from accept.cli import main
    from accept.service import app

    checks = []

    # JSON request/bundle round-trip stability
    req = parse_request(request_dict(seed=SEED))
    bundle = run_analyze(req)
    text = bundle_to_json(bundle)
    checks.append(json.loads(text)["seed"] == SEED)
    checks.append(parse_request(bundle["request"] | {"seed": SEED}) == req)

    # 4-trial request: CLI exit 2
    obj = request_dict(mode="freq")
    obj["trials"] = obj["trials"] * 2
    path = tmp_path / "req.json"
    path.write_text(json.dumps(obj))
    result = CliRunner().invoke(main, ["analyze", "--input", str(path)])
    checks.append(result.exit_code == 2)

    # 4-trial request: HTTP 413
    client = TestClient(app)
    checks.append(client.post("/api/v1/analyze", json=obj).status_code == 413)

    # golden-file SVG byte-identical across runs
    from pathlib import Path
    from accept.curve import acceptability_curve, percentile_markers
    from accept.report import PlotSpec, render_curve_svg
    src = CurveSource.from_effect(risk_difference(validate_trial(EARNEST)))
    spec = PlotSpec(curves=(acceptability_curve(src, trial_name="EARNEST"),),
                    markers=(percentile_markers(src),))
    svg1 = render_curve_svg(spec)
    svg2 = render_curve_svg(spec)
    golden = (Path(__file__).parent / "golden" / "earnest_freq.svg").read_text()
    checks.append(svg1 == svg2 == golden)

    _report("7 interfaces", all(checks))
