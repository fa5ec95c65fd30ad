"""Command-line interface.

Exit codes: 0 success, 2 validation error, 3 convergence failure, 4 I/O error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import __version__
from .bayes import summarize_prior
from .bundle import parse_request, run_analyze, bundle_to_json
from .curve import AcceptabilityTable
from .errors import AcceptError, NotConverged, ValidationError
from .report import Annotation, PlotSpec, render_curve_svg, render_table
from .curve import AcceptabilityCurve, PercentileMarkers

EXIT_VALIDATION = 2
EXIT_CONVERGENCE = 3
EXIT_IO = 4


def _fail(exc: AcceptError, exit_code: int):
    click.echo(f"error [{exc.code}]: {exc.message}", err=True)
    sys.exit(exit_code)


def _side_outputs(name: str, mode: str, side: dict, emit: set, out: Path) -> None:
    curve = AcceptabilityCurve(
        trial_name=name,
        points=tuple((t, v) for t, v in side["curve"]["points"]),
        source=side["curve"]["source"])
    table = AcceptabilityTable(rows=tuple(
        (r["acceptability_threshold"], r["probability"], r["formatted"])
        for r in side["table"]["rows"]))
    stem = f"{name}_{mode}_curve"
    if "svg" in emit:
        m = side["markers"]
        markers = PercentileMarkers(lower=tuple(m["lower"]),
                                    median=tuple(m["median"]),
                                    upper=tuple(m["upper"]))
        spec = PlotSpec(curves=(curve,), markers=(markers,))
        (out / f"{stem}.svg").write_text(render_curve_svg(spec))
    if "csv" in emit:
        (out / f"{stem}.csv").write_text(render_table(table, "csv"))
    if "md" in emit:
        (out / f"{stem}.md").write_text(render_table(table, "markdown"))
    if "json" in emit:
        (out / f"{stem}.json").write_text(json.dumps(side, indent=2) + "\n")


@click.group()
@click.version_option(__version__)
def main():
    """Acceptability-curve analysis of two-arm binary trials."""


@main.command()
@click.option("--input", "input_file", required=True,
              type=click.Path(path_type=Path), help="AnalysisRequest JSON file.")
@click.option("--mode", type=click.Choice(["bayes", "freq", "both"]), default=None,
              help="Override the request's mode.")
@click.option("--seed", type=int, default=None, help="Override the sampler seed.")
@click.option("--out", "out_dir", type=click.Path(path_type=Path), default=None,
              help="Output directory; bundle JSON goes to stdout when omitted.")
@click.option("--emit", default="svg,csv,json",
              help="Comma-separated artifact kinds: svg,csv,json,md.")
def analyze(input_file: Path, mode, seed, out_dir, emit):
    """Run the analysis pipeline on a request file."""
    try:
        raw = input_file.read_text()
    except OSError as exc:
        click.echo(f"error [io]: cannot read {input_file}: {exc}", err=True)
        sys.exit(EXIT_IO)
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        click.echo(f"error [bad_json]: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)

    if mode is not None:
        obj["mode"] = mode
    if seed is not None:
        obj["seed"] = seed

    try:
        request = parse_request(obj)
        bundle = run_analyze(request)
    except NotConverged as exc:
        _fail(exc, EXIT_CONVERGENCE)
    except AcceptError as exc:
        _fail(exc, EXIT_VALIDATION)

    text = bundle_to_json(bundle)
    if out_dir is None:
        click.echo(text, nl=False)
        return
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "bundle.json").write_text(text)
        kinds = {k.strip() for k in emit.split(",") if k.strip()}
        for trial in bundle["trials"]:
            for m in ("freq", "bayes"):
                if m in trial:
                    _side_outputs(trial["name"], m, trial[m], kinds, out_dir)
    except OSError as exc:
        click.echo(f"error [io]: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(f"wrote {out_dir}/bundle.json")


@main.command("prior-summary")
@click.option("--control-rate", type=float, required=True,
              help="Assumed control event rate in (0, 1).")
@click.option("--draws", type=int, default=1_000_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def prior_summary(control_rate, draws, seed):
    """Natural-scale Monte Carlo summaries of the default priors."""
    from .bayes import default_priors
    try:
        priors = default_priors(control_rate)
        summary = summarize_prior(priors, draws, seed=seed)
    except AcceptError as exc:
        _fail(exc, EXIT_VALIDATION)
    click.echo(json.dumps({
        "priors": {
            "intercept_mean_logit": priors.intercept_mean_logit,
            "intercept_sd_logit": priors.intercept_sd_logit,
            "effect_mean_logit": priors.effect_mean_logit,
            "effect_sd_logit": priors.effect_sd_logit,
        },
        "control_rate_percent": summary.control_rate,
        "difference_percent": summary.difference,
    }, indent=2))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service (also configurable via ACCEPT_* env vars)."""
    import uvicorn
    from .service import app
    uvicorn.run(app, host=host, port=port)


@main.command()
def version():
    """Print the package version."""
    click.echo(__version__)


if __name__ == "__main__":
    main()
