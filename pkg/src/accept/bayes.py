"""Bayesian path: priors, log-posterior, Metropolis sampling, and natural-scale
transforms.

The sampler is an adaptive random-walk Metropolis on the two logit-scale
parameters. The proposal covariance starts at the inverse Fisher information
at the MLE scaled by 2.38^2/2, and only a global scale adapts during warmup.
Randomness comes from per-chain Philox counter streams (spawned from the run
seed with numpy SeedSequence), with normals produced by inverse-CDF transform,
so draws are bit-reproducible across platforms for a fixed seed.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import BadRate, DegenerateArm, NotConverged
from .freq import fit_two_arm
from .model import ValidatedTrial
from .stats import logit, normal_quantile_vec

_U_LO = 1e-300
_U_HI = float(np.nextafter(1.0, 0.0))


@dataclass(frozen=True)
class PriorSpec:
    """Normal priors on the logit scale for intercept and treatment effect."""

    intercept_mean_logit: float
    intercept_sd_logit: float = 2.0
    effect_mean_logit: float = 0.0
    effect_sd_logit: float = 8.0

    def __post_init__(self):
        if not (self.intercept_sd_logit > 0 and self.effect_sd_logit > 0):
            raise BadRate("prior standard deviations must be positive")


@dataclass(frozen=True)
class SamplerConfig:
    chains: int = 4
    warmup_iterations: int = 1000
    kept_iterations_per_chain: int = 1000
    seed: int = 0
    target_acceptance: float = 0.30
    rhat_limit: float = 1.05
    rhat_action: str = "error"  # "error" or "warn"
    thin: int = 5  # post-warmup subsampling; retained count is unaffected

    def __post_init__(self):
        if self.chains < 1:
            raise BadRate("chains must be >= 1")
        if self.thin < 1:
            raise BadRate("thin must be >= 1")
        if self.chains < 2 and self.rhat_action == "error":
            raise BadRate("R-hat diagnostics require at least 2 chains")


@dataclass(frozen=True)
class PosteriorDraws:
    """Pooled kept draws with chain indices and convergence diagnostics."""

    draws: np.ndarray        # (chains * kept, 2): intercept_logit, effect_logit
    chain_index: np.ndarray  # (chains * kept,)
    rhat: dict               # parameter name -> split R-hat
    acceptance_rates: tuple  # per chain, post-warmup
    config: SamplerConfig


@dataclass(frozen=True)
class NaturalDraws:
    """Posterior draws on the natural scale."""

    control_rate: np.ndarray
    treatment_rate: np.ndarray
    diff_pp: np.ndarray


@dataclass(frozen=True)
class PriorSummary:
    """Natural-scale Monte Carlo summaries of the priors, in percent."""

    control_rate: dict = field(default_factory=dict)
    difference: dict = field(default_factory=dict)


def default_priors(assumed_control_rate: float) -> PriorSpec:
    """Weakly informative priors: intercept centred at the logit of the assumed
    control rate with sd 2; effect centred at 0 with sd 8."""
    if not 0.0 < assumed_control_rate < 1.0:
        raise BadRate(
            f"assumed_control_rate must be in (0, 1), got {assumed_control_rate}")
    return PriorSpec(intercept_mean_logit=logit(assumed_control_rate))


def log_prior(params: tuple[float, float], priors: PriorSpec) -> float:
    """Sum of the two Normal prior log-densities (normalizing constants in)."""
    a, b = params
    za = (a - priors.intercept_mean_logit) / priors.intercept_sd_logit
    zb = (b - priors.effect_mean_logit) / priors.effect_sd_logit
    return (-0.5 * za * za - math.log(priors.intercept_sd_logit)
            - 0.5 * zb * zb - math.log(priors.effect_sd_logit)
            - math.log(2.0 * math.pi))


def log_posterior(params: tuple[float, float], trial: ValidatedTrial,
                  priors: PriorSpec) -> float:
    """Binomial log-likelihood of both arms plus prior log-densities."""
    a, b = params
    if not (math.isfinite(a) and math.isfinite(b)):
        return -math.inf
    return float(_kernels.log_post_kernel(
        a, b,
        float(trial.spec.control.successes), float(trial.spec.control.n),
        float(trial.spec.treatment.successes), float(trial.spec.treatment.n),
        priors.intercept_mean_logit, priors.intercept_sd_logit,
        priors.effect_mean_logit, priors.effect_sd_logit))


def _proposal_chol(trial: ValidatedTrial, priors: PriorSpec) -> tuple[float, float, float, float, float]:
    """Base proposal Cholesky (l11, l21, l22) plus the starting point (a0, b0).

    Uses the inverse Fisher information at the MLE scaled by 2.38^2/2; for
    degenerate arms, falls back to the prior covariance and prior means.
    """
    scale = 2.38 ** 2 / 2.0
    try:
        fit = fit_two_arm(trial)
        a0, b0 = fit.intercept_logit, fit.effect_logit
        cov = np.array(fit.cov) * scale
    except DegenerateArm:
        a0 = priors.intercept_mean_logit
        b0 = priors.effect_mean_logit
        cov = np.diag([priors.intercept_sd_logit ** 2,
                       priors.effect_sd_logit ** 2]) * scale
    chol = np.linalg.cholesky(cov)
    return float(chol[0, 0]), float(chol[1, 0]), float(chol[1, 1]), a0, b0


def split_rhat(chains: np.ndarray) -> float:
    """Split R-hat: halve each chain, then classic Gelman-Rubin on the halves.

    chains: (n_chains, n_iterations).
    """
    chains = np.asarray(chains, dtype=np.float64)
    m, n = chains.shape
    half = n // 2
    split = np.vstack([chains[:, :half], chains[:, n - half:]])
    means = split.mean(axis=1)
    variances = split.var(axis=1, ddof=1)
    w = variances.mean()
    b = half * np.var(means, ddof=1)
    var_hat = (half - 1) / half * w + b / half
    if w <= 0.0:
        return 1.0
    return float(np.sqrt(var_hat / w))


def sample_posterior(trial: ValidatedTrial, priors: PriorSpec,
                     cfg: SamplerConfig) -> PosteriorDraws:
    """Run the adaptive Metropolis sampler; deterministic given cfg.seed."""
    l11, l21, l22, a0, b0 = _proposal_chol(trial, priors)
    total = cfg.warmup_iterations + cfg.kept_iterations_per_chain * cfg.thin
    kept = cfg.kept_iterations_per_chain

    all_draws = np.empty((cfg.chains * kept, 2), dtype=np.float64)
    chain_index = np.repeat(np.arange(cfg.chains), kept)
    acc_rates = []

    args = (float(trial.spec.control.successes), float(trial.spec.control.n),
            float(trial.spec.treatment.successes), float(trial.spec.treatment.n),
            priors.intercept_mean_logit, priors.intercept_sd_logit,
            priors.effect_mean_logit, priors.effect_sd_logit)

    for chain in range(cfg.chains):
        ss = np.random.SeedSequence(cfg.seed, spawn_key=(chain,))
        gen = np.random.Generator(np.random.Philox(ss))
        u = np.clip(gen.random((total + 1, 2)), _U_LO, _U_HI)
        normals = normal_quantile_vec(u)
        log_unifs = np.log(np.clip(gen.random(total), _U_LO, _U_HI))
        # overdispersed chain starts from the first normal pair
        a_start = a0 + l11 * normals[0, 0]
        b_start = b0 + l21 * normals[0, 0] + l22 * normals[0, 1]
        draws, n_acc = _kernels.mh_chain(
            normals[1:], log_unifs, a_start, b_start, l11, l21, l22,
            cfg.warmup_iterations, cfg.thin, *args, cfg.target_acceptance)
        all_draws[chain * kept:(chain + 1) * kept] = draws
        acc_rates.append(n_acc / (kept * cfg.thin))

    rhat = {}
    if cfg.chains >= 2:
        by_chain = all_draws.reshape(cfg.chains, kept, 2)
        rhat = {
            "intercept_logit": split_rhat(by_chain[:, :, 0]),
            "effect_logit": split_rhat(by_chain[:, :, 1]),
        }
        bad = {k: v for k, v in rhat.items() if v > cfg.rhat_limit}
        if bad:
            msg = (f"split R-hat above {cfg.rhat_limit}: "
                   + ", ".join(f"{k}={v:.4f}" for k, v in bad.items()))
            if cfg.rhat_action == "error":
                raise NotConverged(msg, rhats=rhat)
            warnings.warn(msg)

    return PosteriorDraws(draws=all_draws, chain_index=chain_index, rhat=rhat,
                          acceptance_rates=tuple(acc_rates), config=cfg)


def draws_to_natural(draws: PosteriorDraws) -> NaturalDraws:
    """Transform logit-scale draws to rates and percentage-point differences."""
    if draws.draws.shape[0] == 0:
        from .errors import EmptyDraws
        raise EmptyDraws("no posterior draws to transform")
    a = draws.draws[:, 0]
    eta_t = a + draws.draws[:, 1]
    with np.errstate(over="ignore"):
        control = 1.0 / (1.0 + np.exp(-a))
        treatment = 1.0 / (1.0 + np.exp(-eta_t))
    return NaturalDraws(control_rate=control, treatment_rate=treatment,
                        diff_pp=100.0 * (treatment - control))


def _natural_summary(x: np.ndarray) -> dict:
    q = np.quantile(x, [0.025, 0.25, 0.5, 0.75, 0.975])
    return {
        "median": float(q[2]),
        "mean": float(x.mean()),
        "iqr": (float(q[1]), float(q[3])),
        "central95": (float(q[0]), float(q[4])),
    }


def summarize_prior(priors: PriorSpec, n_draws: int = 1_000_000,
                    seed: int = 0) -> PriorSummary:
    """Monte Carlo summaries of the priors on the natural scale, in percent."""
    if n_draws < 10_000:
        raise BadRate(f"n_draws must be >= 10000, got {n_draws}")
    ss = np.random.SeedSequence(seed, spawn_key=(0xA11CE,))
    gen = np.random.Generator(np.random.Philox(ss))
    u = np.clip(gen.random((n_draws, 2)), _U_LO, _U_HI)
    z = normal_quantile_vec(u)
    a = priors.intercept_mean_logit + priors.intercept_sd_logit * z[:, 0]
    b = priors.effect_mean_logit + priors.effect_sd_logit * z[:, 1]
    with np.errstate(over="ignore"):
        control = 1.0 / (1.0 + np.exp(-a))
        treatment = 1.0 / (1.0 + np.exp(-(a + b)))
    diff = treatment - control
    return PriorSummary(
        control_rate=_natural_summary(100.0 * control),
        difference=_natural_summary(100.0 * diff),
    )
