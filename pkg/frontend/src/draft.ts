// Client-side elicitation state. The draft mirrors the structural rules of
// a comparison system so incomplete or contradictory drafts are never sent
// to the service; the shared best-to-worst entry is held once and written
// into both vectors when building the document.

import type { PcsDocument } from "./api.js";

export interface ElicitationDraft {
  criteria: string[];
  best: string | null;
  worst: string | null;
  bestToOthers: Record<string, number | null>;
  othersToWorst: Record<string, number | null>;
  scaleMax: number;
}

export interface DraftStatus {
  complete: boolean;
  errors: string[];
  warnings: string[];
  document?: PcsDocument;
}

export function emptyDraft(criteria: string[] = ["c1", "c2", "c3"]): ElicitationDraft {
  return {
    criteria: [...criteria],
    best: null,
    worst: null,
    bestToOthers: {},
    othersToWorst: {},
    scaleMax: 9,
  };
}

export function addCriterion(draft: ElicitationDraft, label: string): string | null {
  const name = label.trim();
  if (!name) return "criterion label is empty";
  if (draft.criteria.includes(name)) return `criterion ${name} already exists`;
  draft.criteria.push(name);
  return null;
}

export function removeCriterion(draft: ElicitationDraft, label: string): void {
  draft.criteria = draft.criteria.filter((c) => c !== label);
  delete draft.bestToOthers[label];
  delete draft.othersToWorst[label];
  if (draft.best === label) draft.best = null;
  if (draft.worst === label) draft.worst = null;
}

/** Entry of the best-against row, honoring the structural fixed cells. */
export function bestEntry(draft: ElicitationDraft, criterion: string): number | null {
  if (criterion === draft.best) return 1;
  return draft.bestToOthers[criterion] ?? null;
}

/** Entry of the against-worst column, honoring the structural fixed cells. */
export function worstEntry(draft: ElicitationDraft, criterion: string): number | null {
  if (criterion === draft.worst) return 1;
  if (criterion === draft.best) return bestEntry(draft, draft.worst ?? "");
  return draft.othersToWorst[criterion] ?? null;
}

export function validateDraft(draft: ElicitationDraft): DraftStatus {
  const errors: string[] = [];
  const warnings: string[] = [];
  if (draft.criteria.length < 2) errors.push("add at least two criteria");
  if (!draft.best) errors.push("pick the best criterion");
  if (!draft.worst) errors.push("pick the worst criterion");
  if (draft.best && draft.worst && draft.best === draft.worst) {
    errors.push("best and worst must differ");
  }
  if (errors.length) return { complete: false, errors, warnings };

  const best = draft.best!;
  const worst = draft.worst!;
  const bestRow: Record<string, number> = {};
  const worstCol: Record<string, number> = {};
  for (const c of draft.criteria) {
    const b = bestEntry(draft, c);
    const w = worstEntry(draft, c);
    if (b === null) errors.push(`set best vs ${c}`);
    else if (b < 1 || b > draft.scaleMax) errors.push(`best vs ${c} outside 1..${draft.scaleMax}`);
    else bestRow[c] = b;
    if (w === null) {
      if (c !== best) errors.push(`set ${c} vs worst`);
    } else if (w < 1 || w > draft.scaleMax) {
      errors.push(`${c} vs worst outside 1..${draft.scaleMax}`);
    } else {
      worstCol[c] = w;
    }
  }
  if (errors.length) return { complete: false, errors, warnings };

  const abw = bestRow[worst];
  for (const c of draft.criteria) {
    if (c === best || c === worst) continue;
    if (bestRow[c] > abw) warnings.push(`best vs ${c} exceeds best vs worst (${abw})`);
    if (worstCol[c] > abw) warnings.push(`${c} vs worst exceeds best vs worst (${abw})`);
  }

  const document: PcsDocument = {
    criteria: [...draft.criteria],
    best,
    worst,
    best_to_others: bestRow,
    others_to_worst: worstCol,
    scale_max: draft.scaleMax,
  };
  return { complete: true, errors, warnings, document };
}

export function documentToDraft(doc: PcsDocument): ElicitationDraft {
  const draft = emptyDraft(doc.criteria);
  draft.best = doc.best;
  draft.worst = doc.worst;
  draft.scaleMax = doc.scale_max ?? 9;
  for (const c of doc.criteria) {
    if (c !== doc.best) draft.bestToOthers[c] = doc.best_to_others[c];
    if (c !== doc.worst && c !== doc.best) draft.othersToWorst[c] = doc.others_to_worst[c];
  }
  // the shared entry lives on the best row
  draft.bestToOthers[doc.worst] = doc.best_to_others[doc.worst];
  return draft;
}

const STORAGE_KEY = "linbwm.draft";

export function saveDraft(draft: ElicitationDraft, storage: Storage): void {
  storage.setItem(STORAGE_KEY, JSON.stringify(draft));
}

export function loadDraft(storage: Storage): ElicitationDraft | null {
  const raw = storage.getItem(STORAGE_KEY);
  if (!raw) return null;
  try {
    const parsed = JSON.parse(raw) as ElicitationDraft;
    if (!Array.isArray(parsed.criteria)) return null;
    return { ...emptyDraft(parsed.criteria), ...parsed };
  } catch {
    return null;
  }
}
