// Renders one solve response: weight bars with a badge on the pivot
// criteria, the deviation-bound diagnostics, and the CR gauge.

import type { SolveResult } from "./api.js";
import { crBand, fmt4 } from "./format.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function pivotCriteria(result: SolveResult): Set<string> {
  const pivot = result.solution.case;
  return new Set([pivot.i, pivot.j].filter((x): x is string => x !== null));
}

export function renderSolution(container: HTMLElement, result: SolveResult): void {
  container.replaceChildren();
  const { solution, epsilons, warnings } = result;
  const pivots = pivotCriteria(result);

  const bars = el("div", "weight-bars");
  for (const criterion of solution.criteria) {
    const weight = solution.weights[criterion];
    const row = el("div", "weight-row");
    row.dataset.criterion = criterion;
    const label = el("span", "weight-label", criterion);
    if (pivots.has(criterion)) {
      label.appendChild(el("span", "pivot-badge", "pivot"));
    }
    const track = el("div", "bar-track");
    const bar = el("div", "bar-fill");
    bar.style.width = `${(weight * 100).toFixed(2)}%`;
    track.appendChild(bar);
    const value = el("span", "weight-value", fmt4(weight));
    row.append(label, track, value);
    bars.appendChild(row);
  }
  container.appendChild(bars);

  const summary = el("div", "solution-summary");
  summary.append(
    el("span", "case-tag", solution.case.label),
    el("span", undefined, `epsilon* ${fmt4(solution.epsilon_star)}`),
    el("span", undefined, `sigma ${fmt4(solution.sigma)}`),
    el("span", undefined, `CI ${fmt4(solution.ci)}`),
  );
  container.appendChild(summary);

  const band = crBand(solution.cr);
  const gauge = el("div", `cr-gauge cr-${band}`);
  gauge.append(
    el("span", "cr-value", solution.cr === null ? "CR undefined" : `CR ${fmt4(solution.cr)}`),
    el("span", "cr-note", "color bands are a display convention"),
  );
  container.appendChild(gauge);

  const diag = el("div", "epsilon-diagnostics");
  diag.appendChild(el("h3", undefined, "deviation bounds"));
  const list = el("ul");
  for (const [criterion, value] of Object.entries(epsilons.eps_single)) {
    const item = el("li", undefined, `${criterion}: ${fmt4(value)}`);
    if (epsilons.pivot.kind !== "mixed" && pivots.has(criterion)) {
      item.classList.add("pivot-entry");
      item.appendChild(el("span", "pivot-badge", "pivot"));
    }
    list.appendChild(item);
  }
  for (const pair of epsilons.eps_pair) {
    const item = el("li", undefined, `${pair.i}/${pair.j}: ${fmt4(pair.value)}`);
    if (
      epsilons.pivot.kind === "mixed" &&
      epsilons.pivot.i === pair.i &&
      epsilons.pivot.j === pair.j
    ) {
      item.classList.add("pivot-entry");
      item.appendChild(el("span", "pivot-badge", "pivot"));
    }
    list.appendChild(item);
  }
  diag.appendChild(list);
  diag.appendChild(el("p", "eta-line", `eta = ${fmt4(epsilons.eta)}`));
  container.appendChild(diag);

  if (warnings.length) {
    const box = el("div", "warnings");
    for (const warning of warnings) box.appendChild(el("p", undefined, warning));
    container.appendChild(box);
  }
}
