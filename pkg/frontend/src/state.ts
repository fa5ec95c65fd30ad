/** UI state and the pure transitions the page is wired to.
 *
 * All probability readouts derive either from the last returned bundle or
 * from the local analytic formula on a summary the user typed — never from a
 * stale mixture: any edit that changes what an analysis would return drops
 * `lastBundle`. Moving the slider is a pure read of cached curves and never
 * touches the network.
 */

import { clampThreshold, curveValueAt, sliderBounds } from "./curve.js";
import { localCurveValue, effectCurveValue } from "./stats.js";
import type { AnalysisBundle, BundleCurve, CurvePoint, Mode, TrialEntry } from "./types.js";

export const MAX_TRIALS = 3;
export const TRIAL_LIMIT_MESSAGE =
  "At most three trials can be compared at once; remove one before adding another.";

export type Side = "freq" | "bayes";

export interface UiState {
  trials: TrialEntry[];
  mode: Mode;
  activeThreshold_pp: number;
  lastBundle: AnalysisBundle | null;
  pending: boolean;
  error: string | null;
  offline: boolean;
}

export function createState(): UiState {
  return {
    trials: [],
    mode: "both",
    activeThreshold_pp: 0,
    lastBundle: null,
    pending: false,
    error: null,
    offline: false,
  };
}

export type AddResult = { ok: true } | { ok: false; message: string };

/** Add a trial entry; blocked (with a message, entry untouched) beyond three. */
export function addTrial(state: UiState, trial: TrialEntry): AddResult {
  if (state.trials.length >= MAX_TRIALS) {
    return { ok: false, message: TRIAL_LIMIT_MESSAGE };
  }
  state.trials.push(trial);
  state.lastBundle = null;
  return { ok: true };
}

export function removeTrial(state: UiState, index: number): void {
  state.trials.splice(index, 1);
  state.lastBundle = null;
}

export function setMode(state: UiState, mode: Mode): void {
  if (mode !== state.mode) {
    state.mode = mode;
    state.lastBundle = null;
  }
}

export function applyBundle(state: UiState, bundle: AnalysisBundle): void {
  state.lastBundle = bundle;
  state.error = null;
  state.activeThreshold_pp = clampThreshold(
    state.activeThreshold_pp,
    sliderBounds(displayedCurves(state)),
  );
}

/** Move the slider; clamps to the union of plotted x-ranges. */
export function setThreshold(state: UiState, threshold_pp: number): void {
  state.activeThreshold_pp = clampThreshold(
    threshold_pp,
    sliderBounds(displayedCurves(state)),
  );
}

/** Sides shown for the current mode (both panels in "both" mode). */
export function visibleSides(state: UiState): Side[] {
  return state.mode === "both" ? ["freq", "bayes"] : [state.mode];
}

/** Curves to render, verbatim from the last bundle. */
export function displayedCurves(state: UiState): BundleCurve[] {
  const curves: BundleCurve[] = [];
  if (state.lastBundle) {
    for (const trial of state.lastBundle.trials) {
      for (const side of visibleSides(state)) {
        const curve = trial[side]?.curve;
        if (curve) {
          curves.push(curve);
        }
      }
    }
  }
  return curves;
}

/** Bayesian curve points for one trial, passed through untouched. */
export function displayedCurvePoints(state: UiState, trialIndex: number, side: Side): CurvePoint[] | null {
  return state.lastBundle?.trials[trialIndex]?.[side]?.curve.points ?? null;
}

/** Probability shown next to the slider for one trial and side.
 *
 * Frequentist values use the analytic formula — from the returned effect
 * when a bundle is present, otherwise from a typed-in summary (the offline
 * degraded mode). Bayesian values are step reads of the returned curve and
 * are null until an analysis has run.
 */
export function displayedValue(state: UiState, trialIndex: number, side: Side): number | null {
  const t = state.activeThreshold_pp;
  const fromBundle = state.lastBundle?.trials[trialIndex]?.[side];
  if (side === "freq") {
    if (fromBundle?.effect) {
      return effectCurveValue(fromBundle.effect.mean_pp, fromBundle.effect.se_pp, t);
    }
    const summary = state.trials[trialIndex]?.summary;
    return summary ? localCurveValue(summary, t) : null;
  }
  return fromBundle ? curveValueAt(fromBundle.curve.points, t) : null;
}
