/** Reading values off returned curves.
 *
 * Bayesian (empirical) curves are never recomputed client-side: the points
 * the server returns are the single source of truth and the slider performs
 * a pure step interpolation over them. A point (t_i, v_i) means
 * P(diff > t_i) = v_i, and between points the step holds the value of the
 * largest threshold not exceeding the slider position; left of the first
 * point the probability is 1, right of the last it is the last value.
 */

import type { BundleCurve, CurvePoint } from "./types.js";

/** Step-interpolated curve value at an arbitrary threshold. */
export function curveValueAt(points: readonly CurvePoint[], threshold_pp: number): number {
  if (points.length === 0) {
    throw new Error("curve has no points");
  }
  if (threshold_pp < points[0][0]) {
    return 1;
  }
  // binary search: rightmost index with points[i][0] <= threshold_pp
  let lo = 0;
  let hi = points.length - 1;
  while (lo < hi) {
    const mid = (lo + hi + 1) >> 1;
    if (points[mid][0] <= threshold_pp) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return points[lo][1];
}

/** Slider bounds: union of the plotted x-ranges across curves. */
export function sliderBounds(curves: readonly BundleCurve[]): [number, number] {
  if (curves.length === 0) {
    return [-12, 12];
  }
  let lo = Infinity;
  let hi = -Infinity;
  for (const curve of curves) {
    const pts = curve.points;
    if (pts.length > 0) {
      lo = Math.min(lo, pts[0][0]);
      hi = Math.max(hi, pts[pts.length - 1][0]);
    }
  }
  return [lo, hi];
}

/** Clamp a slider position into the plotted range. */
export function clampThreshold(t: number, bounds: [number, number]): number {
  return Math.min(bounds[1], Math.max(bounds[0], t));
}
