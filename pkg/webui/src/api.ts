/** Thin JSON client for the analysis service. */

import type { AnalyzeResponse, CurveResponse, PresetsResponse, ServiceErrorBody } from "./types.js";

export interface FetchResponseLike {
  ok: boolean;
  status: number;
  text(): Promise<string>;
}

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<FetchResponseLike>;

export class ServiceError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly path: string = "",
  ) {
    super(message);
  }
}

/** A parsed response plus its exact wire bytes (for export and display). */
export interface Fetched<T> {
  data: T;
  raw: string;
}

export class SkylineClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike,
  ) {}

  private async request<T>(path: string, body?: unknown): Promise<Fetched<T>> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method: body === undefined ? "GET" : "POST",
      headers: { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const raw = await response.text();
    if (!response.ok) {
      let message = `service error (HTTP ${response.status})`;
      let errorPath = "";
      try {
        const parsed = JSON.parse(raw) as ServiceErrorBody;
        if (parsed.error?.message) message = parsed.error.message;
        if (parsed.error?.path) errorPath = parsed.error.path;
      } catch {
        // non-JSON error body; keep the generic message
      }
      throw new ServiceError(message, response.status, errorPath);
    }
    return { data: JSON.parse(raw) as T, raw };
  }

  analyze(config: unknown): Promise<Fetched<AnalyzeResponse>> {
    return this.request<AnalyzeResponse>("/api/analyze", config);
  }

  curve(config: unknown, fMinHz: number, fMaxHz: number, samples: number): Promise<Fetched<CurveResponse>> {
    return this.request<CurveResponse>("/api/curve", {
      config,
      f_min_hz: fMinHz,
      f_max_hz: fMaxHz,
      samples,
    });
  }

  presets(): Promise<Fetched<PresetsResponse>> {
    return this.request<PresetsResponse>("/api/presets");
  }
}
