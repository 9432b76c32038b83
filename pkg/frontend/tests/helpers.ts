import { readFileSync } from "node:fs";
import { resolve } from "node:path";

// vitest runs with the package root as cwd; jsdom rewrites import.meta.url,
// so fixture paths are anchored on the filesystem instead.
export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(resolve("tests/fixtures", name), "utf-8")) as T;
}

export function readAsset(relativePath: string): string {
  return readFileSync(resolve(relativePath), "utf-8");
}

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}
