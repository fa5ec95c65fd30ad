"""Hot numeric kernels for the Metropolis sampler.

Kernels are plain nopython-compatible functions compiled with numba when
available. Set ACCEPT_NO_NUMBA=1 to force the pure-Python/numpy fallback
(the same functions, uncompiled); useful for debugging and as a baseline
for benchmarks/bench_sampler.py.

All randomness is pre-generated outside the kernel (counter-based Philox
streams, inverse-CDF normals), so the chains are deterministic given the
seed regardless of which path executes.
"""

from __future__ import annotations

import math
import os

import numpy as np

USE_NUMBA = os.environ.get("ACCEPT_NO_NUMBA", "0").strip().lower() not in {"1", "true", "yes"}
if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is an optional extra
        USE_NUMBA = False

if not USE_NUMBA:
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def _log1pexp(x):
    if x > 35.0:
        return x
    if x < -35.0:
        return math.exp(x)
    return math.log1p(math.exp(x))


_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


@njit(cache=True)
def log_post_kernel(a, b, y_c, n_c, y_t, n_t,
                    prior_int_mean, prior_int_sd, prior_eff_mean, prior_eff_sd):
    """Binomial log-likelihood under the logit link plus Normal log-priors,
    prior normalizing constants included. Finite for all finite (a, b)."""
    eta_t = a + b
    loglik = y_c * a - n_c * _log1pexp(a) + y_t * eta_t - n_t * _log1pexp(eta_t)
    za = (a - prior_int_mean) / prior_int_sd
    zb = (b - prior_eff_mean) / prior_eff_sd
    logprior = (-0.5 * za * za - math.log(prior_int_sd) - _LOG_SQRT_2PI
                - 0.5 * zb * zb - math.log(prior_eff_sd) - _LOG_SQRT_2PI)
    return loglik + logprior


@njit(cache=True)
def mh_chain(normals, log_unifs, a0, b0, l11, l21, l22, warmup, thin,
             y_c, n_c, y_t, n_t,
             prior_int_mean, prior_int_sd, prior_eff_mean, prior_eff_sd,
             target_acceptance):
    """Adaptive random-walk Metropolis chain on (intercept, effect).

    normals: (total, 2) standard-normal proposal increments.
    log_unifs: (total,) log of uniforms for the accept step.
    (l11, l21, l22): lower Cholesky factor of the base proposal covariance.
    The global proposal scale adapts toward target_acceptance during the
    first `warmup` iterations and is frozen afterwards; every thin-th
    post-warmup state is retained.

    Returns (kept draws, accepted count after warmup).
    """
    total = normals.shape[0]
    kept = (total - warmup) // thin
    out = np.empty((kept, 2), dtype=np.float64)

    a = a0
    b = b0
    lp = log_post_kernel(a, b, y_c, n_c, y_t, n_t,
                         prior_int_mean, prior_int_sd, prior_eff_mean, prior_eff_sd)
    log_scale = 0.0
    n_accept_post = 0

    for i in range(total):
        s = math.exp(log_scale)
        z0 = normals[i, 0]
        z1 = normals[i, 1]
        a_new = a + s * (l11 * z0)
        b_new = b + s * (l21 * z0 + l22 * z1)
        lp_new = log_post_kernel(a_new, b_new, y_c, n_c, y_t, n_t,
                                 prior_int_mean, prior_int_sd,
                                 prior_eff_mean, prior_eff_sd)
        diff = lp_new - lp
        if diff >= 0.0:
            alpha = 1.0
        else:
            alpha = math.exp(diff)
        if log_unifs[i] <= diff:
            a = a_new
            b = b_new
            lp = lp_new
            if i >= warmup:
                n_accept_post += 1
        if i < warmup:
            # Robbins-Monro step on the log proposal scale
            gamma = (i + 1.0) ** -0.6
            log_scale += gamma * (alpha - target_acceptance)
            if log_scale > 3.0:
                log_scale = 3.0
            elif log_scale < -5.0:
                log_scale = -5.0
        else:
            j = i - warmup
            if j % thin == thin - 1:
                out[j // thin, 0] = a
                out[j // thin, 1] = b

    return out, n_accept_post
