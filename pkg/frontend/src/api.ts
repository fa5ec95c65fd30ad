/** Thin client for the analysis service.
 *
 * At most one analyze request is in flight: submitting again aborts the
 * previous request so a slow response can never overwrite a newer one.
 */

import type { AnalysisBundle, AnalysisRequest, ApiErrorBody } from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly fieldPath: string | null;

  constructor(body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.fieldPath = body.field_path ?? null;
  }
}

let inflight: AbortController | null = null;

/** POST the request; resolves to the bundle, rejects with ApiError on a
 * service-reported error, rejects with TypeError when unreachable, and
 * rejects with an AbortError if superseded by a newer call. */
export async function postAnalyze(
  request: AnalysisRequest,
  baseUrl = "",
): Promise<AnalysisBundle> {
  inflight?.abort();
  const controller = new AbortController();
  inflight = controller;
  try {
    const response = await fetch(`${baseUrl}/api/v1/analyze`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
      signal: controller.signal,
    });
    if (!response.ok) {
      throw new ApiError((await response.json()) as ApiErrorBody);
    }
    return (await response.json()) as AnalysisBundle;
  } finally {
    if (inflight === controller) {
      inflight = null;
    }
  }
}

/** True when the service answers its health endpoint. */
export async function checkHealth(baseUrl = ""): Promise<boolean> {
  try {
    const response = await fetch(`${baseUrl}/api/v1/health`);
    return response.ok;
  } catch {
    return false;
  }
}
