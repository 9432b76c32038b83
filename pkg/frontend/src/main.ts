// Application wiring: the elicitation editor drives debounced solve calls,
// the what-if explorer lists equivalent inputs, and the study tab drives
// the aggregation endpoint. All numbers on screen come from the service.

import { ApiClient, isAbort } from "./api.js";
import type { ApiError, PcsDocument, StudyDocument } from "./api.js";
import {
  ElicitationDraft,
  addCriterion,
  bestEntry,
  documentToDraft,
  emptyDraft,
  loadDraft,
  removeCriterion,
  saveDraft,
  validateDraft,
  worstEntry,
} from "./draft.js";
import { debounce } from "./format.js";
import { renderSolution } from "./solveView.js";
import { renderStudyEditor, renderRanking, StudyViewState } from "./study.js";
import { renderConsistentEmptyState, renderFamily } from "./whatif.js";

const SEED_DRAFT: PcsDocument = {
  criteria: ["c1", "c2", "c3", "c4", "c5"],
  best: "c1",
  worst: "c5",
  best_to_others: { c1: 1, c2: 2, c3: 3, c4: 4, c5: 7 },
  others_to_worst: { c1: 7, c2: 2, c3: 3, c4: 2, c5: 1 },
  scale_max: 9,
};

function option(value: string, label = value): HTMLOptionElement {
  const node = document.createElement("option");
  node.value = value;
  node.textContent = label;
  return node;
}

export class App {
  draft: ElicitationDraft;
  private study: StudyViewState | null = null;

  constructor(
    private root: Document,
    private api: ApiClient,
    private storage: Storage,
    debounceMs = 300,
  ) {
    this.draft = loadDraft(storage) ?? documentToDraft(SEED_DRAFT);
    this.scheduleSolve = debounce(debounceMs, () => void this.solveNow());
  }

  private scheduleSolve: () => void;

  private byId<T extends HTMLElement>(id: string): T {
    return this.root.getElementById(id) as T;
  }

  start(): void {
    this.byId<HTMLButtonElement>("add-criterion").addEventListener("click", () => {
      const input = this.byId<HTMLInputElement>("new-criterion");
      const problem = addCriterion(this.draft, input.value);
      if (problem) this.showDraftMessages([problem], []);
      input.value = "";
      this.draftChanged();
    });
    this.byId<HTMLButtonElement>("whatif-run").addEventListener("click", () => {
      void this.explore();
    });
    this.byId<HTMLButtonElement>("tab-weighting").addEventListener("click", () => {
      this.switchTab("weighting");
    });
    this.byId<HTMLButtonElement>("tab-study").addEventListener("click", () => {
      this.switchTab("study");
    });
    this.byId<HTMLButtonElement>("load-case-study").addEventListener("click", () => {
      void this.loadCaseStudy();
    });
    this.renderEditor();
    this.draftChanged();
  }

  switchTab(tab: "weighting" | "study"): void {
    this.byId<HTMLElement>("weighting-view").hidden = tab !== "weighting";
    this.byId<HTMLElement>("study-view").hidden = tab !== "study";
  }

  loadDocument(doc: PcsDocument): void {
    this.draft = documentToDraft(doc);
    this.renderEditor();
    this.draftChanged();
  }

  private draftChanged(): void {
    saveDraft(this.draft, this.storage);
    const status = validateDraft(this.draft);
    this.showDraftMessages(status.errors, status.warnings);
    if (status.complete && status.document) {
      this.scheduleSolve();
    }
  }

  private showDraftMessages(errors: string[], warnings: string[]): void {
    const box = this.byId<HTMLElement>("draft-messages");
    box.replaceChildren();
    for (const text of errors) {
      const p = this.root.createElement("p");
      p.className = "draft-error";
      p.textContent = text;
      box.appendChild(p);
    }
    for (const text of warnings) {
      const p = this.root.createElement("p");
      p.className = "draft-warning";
      p.textContent = text;
      box.appendChild(p);
    }
  }

  private markFieldError(error: ApiError): void {
    const box = this.byId<HTMLElement>("draft-messages");
    const p = this.root.createElement("p");
    p.className = "draft-error";
    p.textContent = `${error.code}: ${error.message}`;
    box.appendChild(p);
    if (error.field) {
      const [vector, criterion] = error.field.split(".");
      const control = this.root.querySelector(
        `[data-vector="${vector}"][data-criterion="${criterion}"]`,
      );
      control?.classList.add("field-error");
    }
  }

  async solveNow(): Promise<void> {
    const status = validateDraft(this.draft);
    if (!status.complete || !status.document) return;
    try {
      const envelope = await this.api.solve(status.document);
      if (envelope.ok && envelope.result) {
        renderSolution(this.byId("solution-view"), envelope.result);
      } else if (envelope.error) {
        this.markFieldError(envelope.error);
      }
    } catch (error) {
      if (!isAbort(error)) this.showServiceDown();
    }
  }

  async explore(): Promise<void> {
    const status = validateDraft(this.draft);
    if (!status.complete || !status.document) return;
    const mode = this.byId<HTMLSelectElement>("whatif-mode").value as
      | "worst"
      | "best"
      | "both";
    const view = this.byId<HTMLElement>("whatif-view");
    try {
      const envelope = await this.api.sensitivity(status.document, mode);
      if (envelope.ok && envelope.result) {
        renderFamily(view, envelope.result, (doc) => this.loadDocument(doc));
      } else if (envelope.error?.code === "BaseConsistent") {
        renderConsistentEmptyState(view);
      } else if (envelope.error) {
        view.textContent = `${envelope.error.code}: ${envelope.error.message}`;
      }
    } catch (error) {
      if (!isAbort(error)) this.showServiceDown();
    }
  }

  async loadCaseStudy(): Promise<void> {
    const response = await fetch("case_study.json");
    const doc = (await response.json()) as StudyDocument;
    this.setStudy(doc);
    await this.submitStudy();
  }

  setStudy(doc: StudyDocument): void {
    this.study = { study: doc, activeExpert: doc.experts[0] };
    renderStudyEditor(
      this.byId("study-editor"),
      this.study,
      () => undefined,
      () => void this.submitStudy(),
    );
  }

  async submitStudy(): Promise<void> {
    if (!this.study) return;
    const view = this.byId<HTMLElement>("ranking-view");
    try {
      const envelope = await this.api.aggregate(this.study.study);
      if (envelope.ok && envelope.result) {
        renderRanking(view, envelope.result);
      } else if (envelope.error) {
        view.textContent = `${envelope.error.code}: ${envelope.error.message}`;
      }
    } catch (error) {
      if (!isAbort(error)) this.showServiceDown();
    }
  }

  private showServiceDown(): void {
    this.showDraftMessages(["the weighting service is unreachable"], []);
  }

  renderEditor(): void {
    const list = this.byId<HTMLElement>("criteria-list");
    list.replaceChildren();
    for (const criterion of this.draft.criteria) {
      const chip = this.root.createElement("span");
      chip.className = "criterion-chip";
      chip.textContent = criterion;
      const remove = this.root.createElement("button");
      remove.type = "button";
      remove.textContent = "x";
      remove.addEventListener("click", () => {
        removeCriterion(this.draft, criterion);
        this.renderEditor();
        this.draftChanged();
      });
      chip.appendChild(remove);
      list.appendChild(chip);
    }

    for (const [id, selected] of [
      ["best-select", this.draft.best],
      ["worst-select", this.draft.worst],
    ] as const) {
      const select = this.byId<HTMLSelectElement>(id);
      select.replaceChildren(option("", "(pick)"));
      for (const criterion of this.draft.criteria) select.appendChild(option(criterion));
      select.value = selected ?? "";
      select.onchange = () => {
        if (id === "best-select") this.draft.best = select.value || null;
        else this.draft.worst = select.value || null;
        this.renderEditor();
        this.draftChanged();
      };
    }

    const grid = this.byId<HTMLElement>("comparison-editor");
    grid.replaceChildren();
    if (!this.draft.best || !this.draft.worst || this.draft.best === this.draft.worst) return;
    const header = this.root.createElement("div");
    header.className = "comparison-row comparison-header";
    for (const text of ["criterion", `best (${this.draft.best}) vs it`, `it vs worst (${this.draft.worst})`]) {
      const span = this.root.createElement("span");
      span.textContent = text;
      header.appendChild(span);
    }
    grid.appendChild(header);

    for (const criterion of this.draft.criteria) {
      const row = this.root.createElement("div");
      row.className = "comparison-row";
      const label = this.root.createElement("span");
      label.textContent = criterion;
      row.appendChild(label);
      row.appendChild(this.comparisonControl("best_to_others", criterion));
      row.appendChild(this.comparisonControl("others_to_worst", criterion));
      grid.appendChild(row);
    }
  }

  private comparisonControl(vector: "best_to_others" | "others_to_worst", criterion: string): HTMLElement {
    const fixedOne =
      (vector === "best_to_others" && criterion === this.draft.best) ||
      (vector === "others_to_worst" && criterion === this.draft.worst);
    // the best-against-worst entry is elicited once, on the best row
    const mirrored = vector === "others_to_worst" && criterion === this.draft.best;
    if (fixedOne || mirrored) {
      const span = this.root.createElement("span");
      span.className = "fixed-entry";
      span.textContent = fixedOne
        ? "1"
        : String(bestEntry(this.draft, this.draft.worst ?? "") ?? "-");
      return span;
    }
    const select = this.root.createElement("select");
    select.dataset.vector = vector;
    select.dataset.criterion = criterion;
    select.appendChild(option("", "-"));
    for (let value = 1; value <= this.draft.scaleMax; value += 1) {
      select.appendChild(option(String(value)));
    }
    const current =
      vector === "best_to_others"
        ? bestEntry(this.draft, criterion)
        : worstEntry(this.draft, criterion);
    select.value = current === null ? "" : String(current);
    select.addEventListener("change", () => {
      const value = select.value === "" ? null : Number(select.value);
      if (vector === "best_to_others") this.draft.bestToOthers[criterion] = value;
      else this.draft.othersToWorst[criterion] = value;
      if (vector === "best_to_others" && criterion === this.draft.worst) {
        this.renderEditor(); // refresh the mirrored shared entry
      }
      this.draftChanged();
    });
    return select;
  }
}

export function initApp(root: Document, api = new ApiClient(), storage?: Storage): App {
  const app = new App(root, api, storage ?? window.localStorage);
  app.start();
  return app;
}

declare global {
  interface Window {
    __linbwmApp?: App;
  }
}

if (typeof window !== "undefined" && typeof document !== "undefined" && document.getElementById("app-root")) {
  window.__linbwmApp = initApp(document);
}
