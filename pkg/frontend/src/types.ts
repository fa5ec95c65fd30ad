/** Wire types shared with the analysis service.
 *
 * These mirror the request schema (`src/accept/schema/analysis_request.schema.json`
 * in the repository root) and the bundle JSON returned by POST /api/v1/analyze.
 * Only the fields the UI reads are typed; extra bundle fields pass through
 * untouched.
 */

export interface ArmCount {
  label: string;
  n: number;
  successes: number;
}

export interface TrialCounts {
  control: ArmCount;
  treatment: ArmCount;
}

export interface SummaryInput {
  estimate_pp: number;
  ci_lower_pp: number;
  ci_upper_pp: number;
  ci_level?: number;
}

export interface TrialEntry {
  name: string;
  counts?: TrialCounts;
  summary?: SummaryInput;
  assumed_control_rate?: number;
  unacceptable_difference_pp?: number;
  expected_difference_pp?: number;
}

export type Mode = "freq" | "bayes" | "both";

export interface AnalysisRequest {
  trials: TrialEntry[];
  mode?: Mode;
  thresholds?: number[];
  seed?: number;
}

/** One (threshold_pp, probability) step of a returned curve. */
export type CurvePoint = [number, number];

export interface BundleCurve {
  points: CurvePoint[];
  source: "freq" | "bayes";
  trial_name: string;
}

export interface BundleTableRow {
  acceptability_threshold: number;
  probability: number;
  formatted: string;
}

export interface BundleEffect {
  mean_pp: number;
  se_pp: number;
}

export interface BundleSide {
  effect?: BundleEffect;
  ci95?: [number, number];
  curve: BundleCurve;
  table: { rows: BundleTableRow[] };
  markers: { lower: CurvePoint; median: CurvePoint; upper: CurvePoint };
}

export interface BundleTrial {
  name: string;
  freq?: BundleSide;
  bayes?: BundleSide;
  unacceptable_difference_pp?: number | null;
  expected_difference_pp?: number | null;
}

export interface AnalysisBundle {
  mode: Mode;
  seed: number;
  trials: BundleTrial[];
}

/** Machine-readable error body returned by the service (4xx/5xx). */
export interface ApiErrorBody {
  code: string;
  message: string;
  field_path?: string | null;
}
