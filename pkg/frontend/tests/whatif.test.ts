// @vitest-environment jsdom
import { describe, expect, it, vi } from "vitest";

import type { Envelope, PcsDocument, SensitivityResult } from "../src/api.js";
import { renderConsistentEmptyState, renderFamily } from "../src/whatif.js";
import { fixture } from "./helpers.js";

describe("what-if view", () => {
  it("shows exactly the four equivalent inputs of the first example", () => {
    const envelope = fixture<Envelope<SensitivityResult>>("sensitivity_example1_worst.json");
    const container = document.createElement("div");
    renderFamily(container, envelope.result!, () => undefined);
    expect(container.querySelectorAll(".whatif-row")).toHaveLength(4);
    expect(container.querySelector(".whatif-count")?.textContent).toContain("4 inputs");
    const notes = [...container.querySelectorAll(".whatif-row td:last-child")];
    expect(notes.every((n) => n.textContent === "same weights, same epsilon*")).toBe(true);
  });

  it("shows both members for the vary-best family of example 4", () => {
    const envelope = fixture<Envelope<SensitivityResult>>("sensitivity_example4_best.json");
    const container = document.createElement("div");
    renderFamily(container, envelope.result!, () => undefined);
    expect(container.querySelectorAll(".whatif-row")).toHaveLength(2);
  });

  it("loads a clicked member into the editor", () => {
    const envelope = fixture<Envelope<SensitivityResult>>("sensitivity_example1_worst.json");
    const container = document.createElement("div");
    const picked: PcsDocument[] = [];
    renderFamily(container, envelope.result!, (doc) => picked.push(doc));
    (container.querySelector(".whatif-row") as HTMLElement).click();
    expect(picked).toHaveLength(1);
    expect(picked[0].criteria).toEqual(["c1", "c2", "c3", "c4", "c5"]);
  });

  it("explains the empty state for consistent inputs", () => {
    const container = document.createElement("div");
    renderConsistentEmptyState(container);
    expect(container.querySelector(".whatif-empty")?.textContent).toContain(
      "perfectly consistent",
    );
    const envelope = fixture<Envelope<SensitivityResult>>("sensitivity_consistent.json");
    expect(envelope.ok).toBe(false);
    expect(envelope.error?.code).toBe("BaseConsistent");
    vi.restoreAllMocks();
  });
});
