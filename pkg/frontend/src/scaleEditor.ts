// Rating-scale editor: one editable row per linguistic term plus a live
// axis view of [0, 1] with one band per rating (nesting stays visible) and
// highlighted gaps. Narrow intervals sharpen results but raise the chance
// of conflicts; the axis makes that trade-off visible while editing.

import { scaleGaps, scaleIssues } from "./state.js";
import type { ScaleRow, WorkbenchState } from "./state.js";

export interface ScaleEvents {
  onAdd(term: string, lower: number, upper: number): void;
  onUpdate(index: number, patch: Partial<ScaleRow>): void;
  onRemove(index: number): void;
}

const AXIS_WIDTH = 640;
const BAND_HEIGHT = 14;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function numberInput(value: number, onChange: (value: number) => void): HTMLInputElement {
  const input = el("input");
  input.type = "number";
  input.min = "0";
  input.max = "1";
  input.step = "0.01";
  input.value = String(value);
  input.addEventListener("change", () => onChange(Number(input.value)));
  return input;
}

export function renderAxis(scale: ScaleRow[]): SVGSVGElement {
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  const rows = scale.filter((row) => row.lower <= row.upper);
  const height = (rows.length + 2) * BAND_HEIGHT + 8;
  svg.setAttribute("viewBox", `0 0 ${AXIS_WIDTH} ${height}`);
  svg.setAttribute("class", "scale-axis");
  const x = (value: number) => value * (AXIS_WIDTH - 2) + 1;
  rows.forEach((row, index) => {
    const band = document.createElementNS("http://www.w3.org/2000/svg", "rect");
    band.setAttribute("x", String(x(row.lower)));
    band.setAttribute("y", String(index * BAND_HEIGHT + 2));
    band.setAttribute("width", String(Math.max(x(row.upper) - x(row.lower), 2)));
    band.setAttribute("height", String(BAND_HEIGHT - 4));
    band.setAttribute("class", "scale-band");
    const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
    title.textContent = `${row.term}: [${row.lower}, ${row.upper}]`;
    band.appendChild(title);
    svg.appendChild(band);
  });
  const baseline = rows.length * BAND_HEIGHT + BAND_HEIGHT;
  for (const [lower, upper] of scaleGaps(scale)) {
    const gap = document.createElementNS("http://www.w3.org/2000/svg", "rect");
    gap.setAttribute("x", String(x(lower)));
    gap.setAttribute("y", String(baseline));
    gap.setAttribute("width", String(Math.max(x(upper) - x(lower), 2)));
    gap.setAttribute("height", String(BAND_HEIGHT - 6));
    gap.setAttribute("class", "scale-gap");
    svg.appendChild(gap);
  }
  return svg;
}

export function renderScaleEditor(container: HTMLElement,
                                  state: WorkbenchState,
                                  events: ScaleEvents): void {
  container.replaceChildren();
  const issues = scaleIssues(state.scale);
  const issuesByRow = new Map<number, string[]>();
  for (const issue of issues) {
    const existing = issuesByRow.get(issue.index) ?? [];
    issuesByRow.set(issue.index, [...existing, issue.message]);
  }

  const table = el("table", "scale-table");
  const head = el("tr");
  for (const caption of ["term", "lower", "upper", ""]) {
    head.appendChild(el("th", undefined, caption));
  }
  table.appendChild(head);

  state.scale.forEach((row, index) => {
    const tr = el("tr", issuesByRow.has(index) ? "row-invalid" : undefined);
    const termCell = el("td");
    const termInput = el("input");
    termInput.value = row.term;
    termInput.addEventListener("change", () =>
      events.onUpdate(index, { term: termInput.value }));
    termCell.appendChild(termInput);
    tr.appendChild(termCell);

    const lowerCell = el("td");
    lowerCell.appendChild(numberInput(row.lower, (value) =>
      events.onUpdate(index, { lower: value })));
    tr.appendChild(lowerCell);
    const upperCell = el("td");
    upperCell.appendChild(numberInput(row.upper, (value) =>
      events.onUpdate(index, { upper: value })));
    tr.appendChild(upperCell);

    const removeCell = el("td");
    const removeButton = el("button", undefined, "remove");
    removeButton.addEventListener("click", () => events.onRemove(index));
    removeCell.appendChild(removeButton);
    tr.appendChild(removeCell);
    table.appendChild(tr);

    for (const message of issuesByRow.get(index) ?? []) {
      const issueRow = el("tr", "row-issue");
      const cell = el("td", "issue", message);
      cell.colSpan = 4;
      issueRow.appendChild(cell);
      table.appendChild(issueRow);
    }
  });
  container.appendChild(table);

  const form = el("div", "add-rating");
  const termInput = el("input");
  termInput.placeholder = "term";
  const lowerInput = el("input");
  lowerInput.type = "number";
  lowerInput.value = "0";
  lowerInput.step = "0.01";
  const upperInput = el("input");
  upperInput.type = "number";
  upperInput.value = "1";
  upperInput.step = "0.01";
  const addButton = el("button", undefined, "add rating");
  addButton.addEventListener("click", () => {
    if (termInput.value.trim()) {
      events.onAdd(termInput.value.trim(),
                   Number(lowerInput.value), Number(upperInput.value));
    }
  });
  form.append(termInput, lowerInput, upperInput, addButton);
  container.appendChild(form);

  container.appendChild(renderAxis(state.scale));
  if (state.scale.length === 0) {
    container.appendChild(el("p", "hint",
      "the scale is empty: add at least one rating to evaluate"));
  }
}
