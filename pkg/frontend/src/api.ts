/** Typed client for the planning API.
 *
 * At most one solve request is in flight: issuing a new one aborts the
 * previous, which surfaces as CancelledError so callers can drop it
 * silently. The raw solve body text is preserved alongside the parsed
 * value so state round-trips can be checked byte-for-byte.
 */

import type {
  AgreementInfo,
  ApiErrorBody,
  ScoreRequest,
  ScoreResponse,
  SolveRequest,
  SolveResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class CancelledError extends Error {
  constructor() {
    super("request cancelled");
    this.name = "CancelledError";
  }
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(body.detail || body.error);
    this.name = "ApiError";
  }
}

async function errorBody(response: Response): Promise<ApiErrorBody> {
  try {
    return (await response.json()) as ApiErrorBody;
  } catch {
    return { error: `http_${response.status}`, detail: response.statusText };
  }
}

export class ApiClient {
  private inflightSolve: AbortController | null = null;

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    let response: Response;
    try {
      response = await this.fetchImpl(this.baseUrl + path, init);
    } catch (cause) {
      if (cause instanceof DOMException && cause.name === "AbortError") {
        throw new CancelledError();
      }
      throw new ApiError(0, {
        error: "network",
        detail: cause instanceof Error ? cause.message : String(cause),
      });
    }
    if (!response.ok) {
      throw new ApiError(response.status, await errorBody(response));
    }
    return response;
  }

  async agreements(): Promise<AgreementInfo[]> {
    const response = await this.request("/api/agreements");
    return (await response.json()) as AgreementInfo[];
  }

  /** Solve, cancelling any in-flight solve. Returns raw and parsed body. */
  async solve(
    request: SolveRequest,
  ): Promise<{ raw: string; body: SolveResponse }> {
    this.inflightSolve?.abort();
    const controller = new AbortController();
    this.inflightSolve = controller;
    try {
      const response = await this.request("/api/solve", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(request),
        signal: controller.signal,
      });
      const raw = await response.text();
      return { raw, body: JSON.parse(raw) as SolveResponse };
    } finally {
      if (this.inflightSolve === controller) {
        this.inflightSolve = null;
      }
    }
  }

  async score(request: ScoreRequest): Promise<ScoreResponse> {
    const response = await this.request("/api/score", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    return (await response.json()) as ScoreResponse;
  }
}
