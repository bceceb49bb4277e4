import type {
  AnalysisJson,
  ApiErrorBody,
  ModeKind,
  SessionJson,
  StepResponse,
} from './types.js';

/** Error body from the service, kept verbatim for the feedback panel. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly detail: unknown,
  ) {
    super(message);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base + path, init);
  const body = (await response.json()) as T | ApiErrorBody;
  if (!response.ok) {
    const err = body as ApiErrorBody;
    throw new ApiError(response.status, err.code ?? 'UNKNOWN', err.message ?? 'request failed', err.detail);
  }
  return body as T;
}

function post<T>(base: string, path: string, payload: unknown): Promise<T> {
  return request<T>(base, path, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(payload),
  });
}

export function createSession(base: string, mode: ModeKind, formulas: string[]): Promise<SessionJson> {
  return post(base, '/api/sessions', { mode, formulas });
}

export function fetchSession(base: string, id: string): Promise<SessionJson> {
  return request(base, `/api/sessions/${id}`);
}

export function stepSession(base: string, id: string, nodeId: number, leafId: number): Promise<StepResponse> {
  return post(base, `/api/sessions/${id}/step`, { nodeId, leafId });
}

export function autoFinish(base: string, id: string): Promise<{ session: SessionJson }> {
  return post(base, `/api/sessions/${id}/auto`, {});
}

export function fetchAnalysis(base: string, id: string): Promise<AnalysisJson> {
  return request(base, `/api/sessions/${id}/analysis`);
}
