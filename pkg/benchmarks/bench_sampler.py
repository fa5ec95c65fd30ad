"""Benchmark the Metropolis chain kernel: numba JIT vs pure-Python fallback.

Usage: python benchmarks/bench_sampler.py [--chains N] [--iterations N]

The two paths execute the same function (the fallback is the uncompiled
py_func), consume identical pre-generated random streams, and must return
bit-identical draws.
"""

import argparse
import time

import numpy as np

from accept import _kernels
from accept.bayes import SamplerConfig, default_priors, sample_posterior
from accept.model import ArmCount, TrialSpec, validate_trial


def run(fn, normals, log_unifs, args):
    start = time.perf_counter()
    draws, n_acc = fn(normals, log_unifs, *args)
    return time.perf_counter() - start, draws


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--iterations", type=int, default=2_000_000,
                        help="chain length including warmup")
    parser.add_argument("--repeats", type=int, default=3)
    opts = parser.parse_args()

    if not _kernels.USE_NUMBA:
        raise SystemExit("numba path disabled (ACCEPT_NO_NUMBA set or numba "
                         "missing); nothing to compare")

    total = opts.iterations
    warmup = total // 5
    rng = np.random.Generator(np.random.Philox(12345))
    normals = rng.standard_normal((total, 2))
    log_unifs = np.log(rng.random(total))
    # EARNEST-shaped posterior
    args = (0.4, 0.17, 0.08, -0.08, 0.07, warmup, 1,
            255.0, 426.0, 277.0, 433.0, 1.0986, 2.0, 0.0, 8.0, 0.3)

    jit_fn = _kernels.mh_chain
    py_fn = _kernels.mh_chain.py_func

    # trigger compilation outside the timed region
    run(jit_fn, normals[:1000], log_unifs[:1000],
        (0.4, 0.17, 0.08, -0.08, 0.07, 200, 1,
         255.0, 426.0, 277.0, 433.0, 1.0986, 2.0, 0.0, 8.0, 0.3))

    print(f"chain length {total:,} (warmup {warmup:,}), best of {opts.repeats}")
    results = {}
    for label, fn in (("numba", jit_fn), ("python", py_fn)):
        best, draws = min((run(fn, normals, log_unifs, args)
                           for _ in range(opts.repeats)), key=lambda r: r[0])
        results[label] = (best, draws)
        rate = (total - warmup) / best
        print(f"  {label:7s} {best:8.3f} s   {rate / 1e6:6.2f} M iter/s")

    identical = np.array_equal(results["numba"][1], results["python"][1])
    speedup = results["python"][0] / results["numba"][0]
    print(f"speedup {speedup:.1f}x, outputs bit-identical: {identical}")

    # end-to-end sampling path for context
    trial = validate_trial(TrialSpec("EARNEST", ArmCount("NRTI", 426, 255),
                                     ArmCount("Rtvr", 433, 277)))
    start = time.perf_counter()
    sample_posterior(trial, default_priors(0.75), SamplerConfig(seed=7))
    print(f"full default sample_posterior run: {time.perf_counter() - start:.3f} s")


if __name__ == "__main__":
    main()
