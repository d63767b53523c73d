/** Test doubles: fixture-backed fetch and a manually-resolved fetch. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike, FetchResponseLike } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture(name: string): string {
  return readFileSync(join(here, "fixtures", `${name}.json`), "utf-8");
}

export function ok(raw: string): FetchResponseLike {
  return { ok: true, status: 200, text: async () => raw };
}

export function failure(status: number, raw: string): FetchResponseLike {
  return { ok: false, status, text: async () => raw };
}

export interface RequestCounts {
  analyze: number;
  curve: number;
  presets: number;
}

/** Serves the captured service responses keyed on the requested config. */
export function fixtureFetch(counts?: RequestCounts): FetchLike {
  return async (url, init) => {
    if (url.endsWith("/api/presets")) {
      if (counts) counts.presets += 1;
      return ok(fixture("presets"));
    }
    const body = init?.body ? JSON.parse(init.body) : null;
    const kind = url.endsWith("/api/analyze") ? "analyze" : "curve";
    if (counts) counts[kind] += 1;
    const config = kind === "analyze" ? body : body.config;
    const algorithm = config?.algorithm?.name;
    const hasPayload = Array.isArray(config?.payload) && config.payload.length > 0;
    if (algorithm === "SPA-package-delivery") return ok(fixture(`${kind}_pelican_spa`));
    if (algorithm === "DroNet" && hasPayload) return ok(fixture(`${kind}_pelican_dual`));
    if (algorithm === "DroNet") return ok(fixture(`${kind}_pelican_dronet`));
    throw new Error(`no fixture for ${url} with algorithm ${algorithm}`);
  };
}

export interface PendingRequest {
  url: string;
  body: unknown;
  resolve: (response: FetchResponseLike) => void;
  reject: (error: Error) => void;
}

/** A fetch whose responses the test resolves by hand, to order races. */
export function deferredFetch(): { fetchFn: FetchLike; pending: PendingRequest[] } {
  const pending: PendingRequest[] = [];
  const fetchFn: FetchLike = (url, init) =>
    new Promise((resolve, reject) => {
      pending.push({
        url,
        body: init?.body ? JSON.parse(init.body) : null,
        resolve,
        reject,
      });
    });
  return { fetchFn, pending };
}

export async function flushMicrotasks(rounds = 4): Promise<void> {
  for (let i = 0; i < rounds; i += 1) await Promise.resolve();
}
