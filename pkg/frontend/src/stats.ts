/** Normal distribution helpers for instant client-side curve values.
 *
 * The server's frequentist curve is Phi((mean - t) / se); the UI evaluates
 * the same formula locally so dragging the slider never waits on the network.
 * The erfc approximation below is accurate to ~1.2e-7, far inside the 0.1 pp
 * agreement contract with the server.
 */

import type { SummaryInput } from "./types.js";

export const Z_95 = 1.959963984540054;

/** Complementary error function (Numerical-Recipes-style Chebyshev fit). */
function erfc(x: number): number {
  const z = Math.abs(x);
  const t = 1 / (1 + z / 2);
  const poly =
    -z * z -
    1.26551223 +
    t *
      (1.00002368 +
        t *
          (0.37409196 +
            t *
              (0.09678418 +
                t *
                  (-0.18628806 +
                    t *
                      (0.27886807 +
                        t *
                          (-1.13520398 +
                            t *
                              (1.48851587 +
                                t * (-0.82215223 + t * 0.17087277))))))));
  const ans = t * Math.exp(poly);
  return x >= 0 ? ans : 2 - ans;
}

/** Standard normal CDF. */
export function normalCdf(x: number): number {
  return 0.5 * erfc(-x / Math.SQRT2);
}

/** Standard normal quantile (Acklam's rational approximation, |err| < 1.2e-8
 * relative; used only to recover the z of a non-95% interval). */
export function normalQuantile(p: number): number {
  if (!(p > 0 && p < 1)) {
    throw new Error(`quantile argument out of (0, 1): ${p}`);
  }
  const a = [-3.969683028665376e1, 2.209460984245205e2, -2.759285104469687e2,
             1.38357751867269e2, -3.066479806614716e1, 2.506628277459239];
  const b = [-5.447609879822406e1, 1.615858368580409e2, -1.556989798598866e2,
             6.680131188771972e1, -1.328068155288572e1];
  const c = [-7.784894002430293e-3, -3.223964580411365e-1, -2.400758277161838,
             -2.549732539343734, 4.374664141464968, 2.938163982698783];
  const d = [7.784695709041462e-3, 3.224671290700398e-1, 2.445134137142996,
             3.754408661907416];
  const pLow = 0.02425;
  let q: number;
  let x: number;
  if (p < pLow) {
    q = Math.sqrt(-2 * Math.log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (p <= 1 - pLow) {
    q = p - 0.5;
    const r = q * q;
    x = ((((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q) /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    q = Math.sqrt(-2 * Math.log(1 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  return x;
}

/** Standard error (in pp) implied by a symmetric CI on a summary entry. */
export function seFromSummary(summary: SummaryInput): number {
  const level = summary.ci_level ?? 0.95;
  const z = level === 0.95 ? Z_95 : normalQuantile((1 + level) / 2);
  const halfWidth = (summary.ci_upper_pp - summary.ci_lower_pp) / 2;
  if (!(halfWidth > 0)) {
    throw new Error("confidence interval must have positive width");
  }
  return halfWidth / z;
}

/** Client-side confidence-curve value: P-style Phi((mean - t) / se). */
export function localCurveValue(summary: SummaryInput, threshold_pp: number): number {
  return normalCdf((summary.estimate_pp - threshold_pp) / seFromSummary(summary));
}

/** Same formula evaluated from a returned effect (mean/se already in pp). */
export function effectCurveValue(mean_pp: number, se_pp: number, threshold_pp: number): number {
  return normalCdf((mean_pp - threshold_pp) / se_pp);
}
