/** Test plumbing: recorded-fixture loading and a fetch fake that replays
 * byte-exact server responses captured from the real API. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";

const FIXTURE_DIR = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export interface RecordedExchange {
  request: { method: string; path: string; body: unknown | null };
  status: number;
  raw: string;
}

export function loadFixture(name: string): RecordedExchange {
  const text = readFileSync(join(FIXTURE_DIR, `${name}.json`), "utf-8");
  return JSON.parse(text) as RecordedExchange;
}

function stableStringify(value: unknown): string {
  if (Array.isArray(value)) {
    return `[${value.map(stableStringify).join(",")}]`;
  }
  if (value !== null && typeof value === "object") {
    const entries = Object.entries(value as Record<string, unknown>)
      .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
      .map(([key, inner]) => `${JSON.stringify(key)}:${stableStringify(inner)}`);
    return `{${entries.join(",")}}`;
  }
  return JSON.stringify(value);
}

/** Replays recorded exchanges; unmatched requests fail the test loudly. */
export function fakeFetch(fixtures: RecordedExchange[]): FetchLike {
  return async (input, init) => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body as string) : null;
    for (const fixture of fixtures) {
      if (
        fixture.request.method === method &&
        fixture.request.path === input &&
        stableStringify(fixture.request.body) === stableStringify(body)
      ) {
        return new Response(fixture.raw, {
          status: fixture.status,
          headers: { "Content-Type": "application/json" },
        });
      }
    }
    throw new Error(
      `no recorded exchange for ${method} ${input} ${JSON.stringify(body)}`,
    );
  };
}

export const ALL_FIXTURES = [
  "agreements",
  "solve_pair",
  "solve_exclude_hist70",
  "solve_exclude_writing",
  "solve_pin_hist50",
  "solve_unit_cap5",
  "score_worst",
  "score_optimal",
  "score_unknown",
].map(loadFixture);
