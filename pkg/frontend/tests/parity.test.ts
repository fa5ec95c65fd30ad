/** UI/server parity acceptance checks.
 *
 * The fixture bundle was produced by the analysis CLI for the two published
 * trials (EARNEST, SECOND-LINE) with table thresholds {-12, -5, 0, 5}. The
 * UI must agree with the server's frequentist values within 0.1 pp — and
 * byte-for-byte after formatting — at every one of those slider positions,
 * must block a fourth trial, and must display Bayesian curves exactly as
 * returned.
 */

import { readFileSync } from "node:fs";
import { afterAll, describe, expect, it } from "vitest";

import { curveValueAt } from "../src/curve.js";
import { formatPercent2sf } from "../src/format.js";
import { localCurveValue } from "../src/stats.js";
import {
  addTrial,
  applyBundle,
  createState,
  displayedCurvePoints,
  displayedValue,
  setThreshold,
  MAX_TRIALS,
} from "../src/state.js";
import type { AnalysisBundle, TrialEntry } from "../src/types.js";

const bundle = JSON.parse(
  readFileSync(new URL("./fixtures/bundle.json", import.meta.url), "utf8"),
) as AnalysisBundle;

const THRESHOLDS = [-12, -5, 0, 5];
const TOLERANCE_PP = 0.1;

function stateWithBundle() {
  const state = createState();
  for (const trial of bundle.trials) {
    addTrial(state, { name: trial.name });
  }
  applyBundle(state, bundle);
  return state;
}

function dummyTrial(name: string): TrialEntry {
  return {
    name,
    counts: {
      control: { label: "c", n: 100, successes: 50 },
      treatment: { label: "t", n: 100, successes: 55 },
    },
  };
}

const passed = new Set<string>();
const EXPECTED_CHECKS = 4;

afterAll(() => {
  console.log(`ACCEPTANCE 8: ${passed.size === EXPECTED_CHECKS ? "PASS" : "FAIL"}`);
});

describe("UI parity with the server", () => {
  it("freq slider values match the server within 0.1 pp and format identically", () => {
    const state = stateWithBundle();
    for (const [index, trial] of bundle.trials.entries()) {
      for (const row of trial.freq!.table.rows) {
        expect(THRESHOLDS).toContain(row.acceptability_threshold);
        setThreshold(state, row.acceptability_threshold);
        const shown = displayedValue(state, index, "freq");
        expect(shown).not.toBeNull();
        expect(Math.abs(shown! - row.probability) * 100).toBeLessThanOrEqual(TOLERANCE_PP);
        expect(formatPercent2sf(shown!)).toBe(row.formatted);
      }
    }
    passed.add("freq-parity");
  });

  it("offline local formula from a typed summary agrees with the server too", () => {
    for (const trial of bundle.trials) {
      const summary = {
        estimate_pp: trial.freq!.effect!.mean_pp,
        ci_lower_pp: trial.freq!.ci95![0],
        ci_upper_pp: trial.freq!.ci95![1],
      };
      for (const row of trial.freq!.table.rows) {
        const local = localCurveValue(summary, row.acceptability_threshold);
        expect(Math.abs(local - row.probability) * 100).toBeLessThanOrEqual(TOLERANCE_PP);
        expect(formatPercent2sf(local)).toBe(row.formatted);
      }
    }
    passed.add("local-parity");
  });

  it("blocks adding a fourth trial without losing entered trials", () => {
    const state = createState();
    for (let i = 0; i < MAX_TRIALS; i++) {
      expect(addTrial(state, dummyTrial(`trial ${i + 1}`)).ok).toBe(true);
    }
    const blocked = addTrial(state, dummyTrial("trial 4"));
    expect(blocked.ok).toBe(false);
    if (!blocked.ok) {
      expect(blocked.message).toMatch(/three trials/);
    }
    expect(state.trials).toHaveLength(MAX_TRIALS);
    expect(state.trials.map((t) => t.name)).not.toContain("trial 4");
    passed.add("fourth-blocked");
  });

  it("displays Bayesian curves point-identical to the bundle arrays", () => {
    const state = stateWithBundle();
    for (const [index, trial] of bundle.trials.entries()) {
      const points = displayedCurvePoints(state, index, "bayes");
      expect(points).toBe(trial.bayes!.curve.points); // pass-through, not a copy
      expect(points).toEqual(trial.bayes!.curve.points);
      // the slider read at each curve point reproduces the point's value
      // exactly; thresholds rounded to 6 dp can collide, in which case the
      // step holds the last point at that threshold
      const pts = trial.bayes!.curve.points;
      for (let i = 0; i < pts.length; i++) {
        if (i + 1 < pts.length && pts[i + 1][0] === pts[i][0]) {
          continue;
        }
        expect(curveValueAt(points!, pts[i][0])).toBe(pts[i][1]);
      }
    }
    passed.add("bayes-identical");
  });
});
