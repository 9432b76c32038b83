// What-if view: the family of perturbed inputs that provably keep the
// weights and objective unchanged. Each row shows one member's comparison
// vectors; clicking it loads that member into the editor.

import type { PcsDocument, SensitivityResult } from "./api.js";

function row(doc: PcsDocument, onPick: (doc: PcsDocument) => void): HTMLTableRowElement {
  const tr = document.createElement("tr");
  tr.className = "whatif-row";
  const bestCell = document.createElement("td");
  bestCell.textContent = doc.criteria.map((c) => doc.best_to_others[c]).join(", ");
  const worstCell = document.createElement("td");
  worstCell.textContent = doc.criteria.map((c) => doc.others_to_worst[c]).join(", ");
  const note = document.createElement("td");
  note.textContent = "same weights, same epsilon*";
  tr.append(bestCell, worstCell, note);
  tr.addEventListener("click", () => onPick(doc));
  return tr;
}

export function renderFamily(
  container: HTMLElement,
  result: SensitivityResult,
  onPick: (doc: PcsDocument) => void,
): void {
  container.replaceChildren();
  const heading = document.createElement("p");
  heading.className = "whatif-count";
  heading.textContent = `${result.count} input${result.count === 1 ? "" : "s"} lead to this exact solution (mode: vary ${result.mode})`;
  container.appendChild(heading);

  const table = document.createElement("table");
  table.className = "whatif-table";
  const head = document.createElement("tr");
  for (const title of ["best against others", "others against worst", ""]) {
    const th = document.createElement("th");
    th.textContent = title;
    head.appendChild(th);
  }
  table.appendChild(head);
  for (const member of result.members ?? []) {
    table.appendChild(row(member, onPick));
  }
  container.appendChild(table);
}

export function renderConsistentEmptyState(container: HTMLElement): void {
  container.replaceChildren();
  const box = document.createElement("div");
  box.className = "whatif-empty";
  const p = document.createElement("p");
  p.textContent =
    "This input is perfectly consistent: the exact-ratio weights follow " +
    "directly from it, so there is no perturbation family to explore.";
  box.appendChild(p);
  container.appendChild(box);
}
