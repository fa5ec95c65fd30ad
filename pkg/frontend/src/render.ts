/** SVG rendering of returned curves, template-literal style.
 *
 * The server's plot conventions are mirrored where they matter to a reader:
 * thresholds in percentage points on x, probability as percent on y, a
 * dotted reference line at zero, one colour per trial.
 */

import { sliderBounds } from "./curve.js";
import type { BundleCurve } from "./types.js";

const PALETTE = ["#0072b2", "#d55e00", "#009e73"];

const WIDTH = 720;
const HEIGHT = 360;
const MARGIN = { top: 16, right: 16, bottom: 40, left: 52 };

function xScale(lo: number, hi: number): (t: number) => number {
  const span = hi - lo || 1;
  return (t) => MARGIN.left + ((t - lo) / span) * (WIDTH - MARGIN.left - MARGIN.right);
}

function yScale(p: number): number {
  return MARGIN.top + (1 - p) * (HEIGHT - MARGIN.top - MARGIN.bottom);
}

function pathFor(curve: BundleCurve, x: (t: number) => number): string {
  return curve.points
    .map(([t, p], i) => `${i === 0 ? "M" : "L"}${x(t).toFixed(2)},${yScale(p).toFixed(2)}`)
    .join("");
}

/** Render the overlay plot with a marker line at the active threshold. */
export function renderCurvesSvg(curves: readonly BundleCurve[], activeThreshold_pp: number): string {
  const [lo, hi] = sliderBounds(curves);
  const x = xScale(lo, hi);
  const yTicks = [0, 0.25, 0.5, 0.75, 1]
    .map(
      (p) => `
    <g>
      <line x1="${MARGIN.left}" x2="${WIDTH - MARGIN.right}" y1="${yScale(p)}" y2="${yScale(p)}" stroke="#ddd"/>
      <text x="${MARGIN.left - 8}" y="${yScale(p) + 4}" text-anchor="end" font-size="11">${p * 100}%</text>
    </g>`,
    )
    .join("");
  const paths = curves
    .map(
      (curve, i) => `
    <path d="${pathFor(curve, x)}" fill="none" stroke="${PALETTE[i % PALETTE.length]}" stroke-width="1.5">
      <title>${curve.trial_name} (${curve.source})</title>
    </path>`,
    )
    .join("");
  const zeroLine =
    lo <= 0 && 0 <= hi
      ? `<line x1="${x(0)}" x2="${x(0)}" y1="${MARGIN.top}" y2="${HEIGHT - MARGIN.bottom}" stroke="#888" stroke-dasharray="2,3"/>`
      : "";
  const marker = `<line x1="${x(activeThreshold_pp).toFixed(2)}" x2="${x(activeThreshold_pp).toFixed(2)}" y1="${MARGIN.top}" y2="${HEIGHT - MARGIN.bottom}" stroke="#333" stroke-width="1"/>`;
  const legend = curves
    .map(
      (curve, i) =>
        `<text x="${MARGIN.left + 8}" y="${MARGIN.top + 14 + 16 * i}" font-size="12" fill="${PALETTE[i % PALETTE.length]}">${curve.trial_name} (${curve.source})</text>`,
    )
    .join("");
  return `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" aria-label="Acceptability curves">
  ${yTicks}
  ${zeroLine}
  ${paths}
  ${marker}
  ${legend}
  <text x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" y="${HEIGHT - 8}" text-anchor="middle" font-size="12">Acceptability threshold (percentage points)</text>
</svg>`;
}
