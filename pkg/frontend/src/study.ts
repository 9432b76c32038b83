// Study editor and aggregation dashboard: per-expert tabs with editable
// weight blocks, submit to the aggregation endpoint, and a ranking table
// in the familiar layout (driver, final weight, rank).

import type { AggregateResult, BlockDoc, StudyDocument } from "./api.js";
import { fmt4 } from "./format.js";

export interface StudyViewState {
  study: StudyDocument;
  activeExpert: string;
}

function blockEditor(
  block: BlockDoc,
  labels: string[],
  onEdit: (label: string, value: number) => void,
): HTMLElement {
  const box = document.createElement("div");
  box.className = "block-editor";
  if (block.pcs) {
    const note = document.createElement("p");
    note.className = "block-note";
    note.textContent = "comparison block (solved on submit)";
    box.appendChild(note);
    return box;
  }
  for (const label of labels) {
    const row = document.createElement("label");
    row.className = "block-weight";
    const span = document.createElement("span");
    span.textContent = label;
    const input = document.createElement("input");
    input.type = "number";
    input.step = "0.0001";
    input.min = "0";
    input.value = String(block.weights?.[label] ?? 0);
    input.dataset.label = label;
    input.addEventListener("change", () => onEdit(label, Number(input.value)));
    row.append(span, input);
    box.appendChild(row);
  }
  return box;
}

export function renderStudyEditor(
  container: HTMLElement,
  state: StudyViewState,
  onChange: () => void,
  onSubmit: () => void,
): void {
  container.replaceChildren();
  const { study } = state;

  const tabs = document.createElement("div");
  tabs.className = "expert-tabs";
  for (const expert of study.experts) {
    const tab = document.createElement("button");
    tab.type = "button";
    tab.textContent = expert;
    tab.className = expert === state.activeExpert ? "tab active" : "tab";
    tab.addEventListener("click", () => {
      state.activeExpert = expert;
      renderStudyEditor(container, state, onChange, onSubmit);
    });
    tabs.appendChild(tab);
  }
  container.appendChild(tabs);

  const expert = state.activeExpert;
  const section = document.createElement("div");
  section.className = "expert-blocks";

  const catHeading = document.createElement("h3");
  catHeading.textContent = `${expert}: category weights`;
  section.appendChild(catHeading);
  const catBlock = study.category_input[expert];
  section.appendChild(
    blockEditor(catBlock, study.categories, (label, value) => {
      if (catBlock.weights) catBlock.weights[label] = value;
      onChange();
    }),
  );

  for (const category of study.categories) {
    const heading = document.createElement("h3");
    heading.textContent = `${expert}: drivers of ${category}`;
    section.appendChild(heading);
    const block = study.driver_input[expert][category];
    section.appendChild(
      blockEditor(block, study.drivers[category], (label, value) => {
        if (block.weights) block.weights[label] = value;
        onChange();
      }),
    );
  }
  container.appendChild(section);

  const submit = document.createElement("button");
  submit.type = "button";
  submit.id = "study-submit";
  submit.textContent = "recompute ranking";
  submit.addEventListener("click", onSubmit);
  container.appendChild(submit);
}

export function renderRanking(container: HTMLElement, result: AggregateResult): void {
  container.replaceChildren();
  const table = document.createElement("table");
  table.className = "ranking-table";
  const head = document.createElement("tr");
  for (const title of ["driver", "final weight", "rank"]) {
    const th = document.createElement("th");
    th.textContent = title;
    head.appendChild(th);
  }
  table.appendChild(head);

  const position = new Map(result.ranking.map((driver, index) => [driver, index + 1]));
  for (const driver of result.driver_order) {
    const tr = document.createElement("tr");
    tr.dataset.driver = driver;
    if (position.get(driver) === 1) tr.classList.add("rank-first");
    const name = document.createElement("td");
    name.textContent = driver;
    const weight = document.createElement("td");
    weight.textContent = fmt4(result.final_weights[driver]);
    const rank = document.createElement("td");
    rank.textContent = String(position.get(driver));
    tr.append(name, weight, rank);
    table.appendChild(tr);
  }
  container.appendChild(table);

  const blocks = document.createElement("div");
  blocks.className = "block-reports";
  for (const report of result.blocks) {
    const line = document.createElement("p");
    const scope = report.category ?? "categories";
    const cr = report.cr === null ? "undefined" : fmt4(report.cr);
    line.textContent = `${report.expert} / ${scope}: epsilon* ${fmt4(report.epsilon_star)}, CR ${cr}`;
    blocks.appendChild(line);
  }
  container.appendChild(blocks);
}
