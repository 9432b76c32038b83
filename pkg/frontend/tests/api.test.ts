import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, isAbort } from "../src/api.js";
import type { PcsDocument, SolveResult, Envelope } from "../src/api.js";
import { fixture, jsonResponse } from "./helpers.js";

const DOC: PcsDocument = {
  criteria: ["a", "b"],
  best: "a",
  worst: "b",
  best_to_others: { a: 1, b: 4 },
  others_to_worst: { a: 4, b: 1 },
};

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("unwraps success envelopes", async () => {
    const payload = fixture<Envelope<SolveResult>>("solve_example1.json");
    vi.stubGlobal("fetch", vi.fn(async () => jsonResponse(payload)));
    const envelope = await new ApiClient().solve(DOC);
    expect(envelope.ok).toBe(true);
    expect(envelope.result?.solution.case.label).toBe("BestSide(c2)");
  });

  it("passes error envelopes through untouched", async () => {
    const payload = fixture<Envelope<SolveResult>>("solve_bw_mismatch.json");
    vi.stubGlobal("fetch", vi.fn(async () => jsonResponse(payload, 422)));
    const envelope = await new ApiClient().solve(DOC);
    expect(envelope.ok).toBe(false);
    expect(envelope.error?.code).toBe("BwMismatch");
  });

  it("aborts the older of two overlapping solves (latest wins)", async () => {
    const signals: AbortSignal[] = [];
    const resolvers: Array<(r: Response) => void> = [];
    vi.stubGlobal(
      "fetch",
      vi.fn((_url: unknown, init?: RequestInit) => {
        const signal = init?.signal as AbortSignal;
        signals.push(signal);
        return new Promise<Response>((resolve, reject) => {
          signal.addEventListener("abort", () =>
            reject(new DOMException("aborted", "AbortError")),
          );
          resolvers.push(resolve);
        });
      }),
    );
    const client = new ApiClient();
    const first = client.solve(DOC);
    const second = client.solve(DOC);
    expect(signals[0].aborted).toBe(true);
    expect(signals[1].aborted).toBe(false);

    await expect(first).rejects.toSatisfy(isAbort);
    resolvers[1](jsonResponse({ ok: true, result: null }));
    const envelope = await second;
    expect(envelope.ok).toBe(true);
  });

  it("sends the sensitivity mode alongside the document", async () => {
    const seen: unknown[] = [];
    vi.stubGlobal(
      "fetch",
      vi.fn(async (_url: unknown, init?: RequestInit) => {
        seen.push(JSON.parse(String(init?.body)));
        return jsonResponse({ ok: true, result: { mode: "worst", count: 1 } });
      }),
    );
    await new ApiClient().sensitivity(DOC, "worst");
    expect(seen[0]).toEqual({ pcs: DOC, mode: "worst" });
  });
});
