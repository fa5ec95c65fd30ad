/** Page wiring: DOM events in, pure state transitions, DOM updates out. */

import { ApiError, checkHealth, postAnalyze } from "./api.js";
import { sliderBounds } from "./curve.js";
import { formatPercent2sf } from "./format.js";
import { renderCurvesSvg } from "./render.js";
import {
  addTrial,
  applyBundle,
  createState,
  displayedCurves,
  displayedValue,
  removeTrial,
  setMode,
  setThreshold,
  visibleSides,
} from "./state.js";
import type { Mode, TrialEntry } from "./types.js";

const state = createState();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

const slider = el<HTMLInputElement>("threshold-slider");
const sliderValue = el<HTMLOutputElement>("threshold-value");
const readouts = el<HTMLDivElement>("readouts");
const plot = el<HTMLDivElement>("plot");
const errorBox = el<HTMLParagraphElement>("error");
const trialList = el<HTMLUListElement>("trial-list");
const pending = el<HTMLSpanElement>("pending");

function readNumber(id: string): number {
  return Number(el<HTMLInputElement>(id).value);
}

function trialFromForm(): TrialEntry {
  return {
    name: el<HTMLInputElement>("trial-name").value.trim(),
    counts: {
      control: { label: "control", n: readNumber("control-n"), successes: readNumber("control-successes") },
      treatment: { label: "treatment", n: readNumber("treatment-n"), successes: readNumber("treatment-successes") },
    },
    assumed_control_rate: readNumber("assumed-rate"),
  };
}

function updateTrialList(): void {
  trialList.replaceChildren(
    ...state.trials.map((trial, index) => {
      const item = document.createElement("li");
      const remove = document.createElement("button");
      remove.textContent = "remove";
      remove.addEventListener("click", () => {
        removeTrial(state, index);
        updateTrialList();
        updateReadouts();
        updatePlot();
      });
      const counts = trial.counts;
      item.textContent = counts
        ? `${trial.name}: ${counts.control.successes}/${counts.control.n} vs ${counts.treatment.successes}/${counts.treatment.n} `
        : `${trial.name} (summary) `;
      item.appendChild(remove);
      return item;
    }),
  );
}

function updateSliderRange(): void {
  const curves = displayedCurves(state);
  if (curves.length > 0) {
    const [lo, hi] = sliderBounds(curves);
    slider.min = lo.toFixed(1);
    slider.max = hi.toFixed(1);
  }
  slider.value = String(state.activeThreshold_pp);
}

function updateReadouts(): void {
  sliderValue.textContent = `${state.activeThreshold_pp.toFixed(1)} pp`;
  readouts.replaceChildren(
    ...state.trials.flatMap((trial, index) =>
      visibleSides(state).map((side) => {
        const line = document.createElement("div");
        const value = displayedValue(state, index, side);
        line.textContent =
          value === null
            ? `${trial.name} (${side}): — run the analysis`
            : `${trial.name} (${side}): P(true difference > threshold) = ${formatPercent2sf(value)}`;
        return line;
      }),
    ),
  );
}

function updatePlot(): void {
  const curves = displayedCurves(state);
  plot.innerHTML = curves.length > 0 ? renderCurvesSvg(curves, state.activeThreshold_pp) : "";
}

function showError(message: string): void {
  errorBox.textContent = message;
}

el<HTMLButtonElement>("add-trial").addEventListener("click", () => {
  const result = addTrial(state, trialFromForm());
  if (!result.ok) {
    showError(result.message);
    return;
  }
  showError("");
  updateTrialList();
  updateReadouts();
  updatePlot();
});

el<HTMLSelectElement>("mode").addEventListener("change", (event) => {
  setMode(state, (event.target as HTMLSelectElement).value as Mode);
  updateReadouts();
  updatePlot();
});

// Slider motion is a pure client-side read: no network call, ever.
slider.addEventListener("input", () => {
  setThreshold(state, Number(slider.value));
  updateReadouts();
  updatePlot();
});

el<HTMLButtonElement>("analyze").addEventListener("click", async () => {
  if (state.trials.length === 0) {
    showError("Add at least one trial first.");
    return;
  }
  state.pending = true;
  pending.hidden = false;
  try {
    const bundle = await postAnalyze({ trials: state.trials, mode: state.mode });
    applyBundle(state, bundle);
    state.offline = false;
    el("offline-banner").style.display = "none";
    showError("");
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") {
      return; // superseded by a newer request
    }
    if (err instanceof ApiError) {
      // entered data stays put; surface the server's machine-readable code
      showError(`${err.code}: ${err.message}${err.fieldPath ? ` (${err.fieldPath})` : ""}`);
    } else {
      state.offline = true;
      el("offline-banner").style.display = "block";
    }
  } finally {
    state.pending = false;
    pending.hidden = true;
  }
  updateSliderRange();
  updateReadouts();
  updatePlot();
});

checkHealth().then((healthy) => {
  state.offline = !healthy;
  el("offline-banner").style.display = healthy ? "none" : "block";
});

updateReadouts();
