// Results explorer: ranked estimates with Bel/Pl bars, per-step conflict
// and K, and the stacked cumulated-mass diagram. Sources are drawn as
// translucent layers so regions where their bands overlap read as expert
// agreement; horizontal stretches with no band are scale ratings nobody
// used. All numbers come verbatim from the service response, rounded for
// display per the document's RoundDigsNumber.

import { formatInterval, formatNumber } from "./state.js";
import type { DiagramRow, ResultEntry, RunReport } from "./types.js";

const DIAGRAM_WIDTH = 640;
const DIAGRAM_HEIGHT = 220;
const SOURCE_COLORS = ["#3566b0", "#c0662d", "#3d8a4c", "#8a4c9c", "#a03a4a"];

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

function bar(value: number, className: string): HTMLElement {
  const outer = el("div", "bar");
  const inner = el("div", `bar-fill ${className}`);
  inner.style.width = `${Math.round(value * 100)}%`;
  outer.appendChild(inner);
  return outer;
}

export function renderDiagram(rows: DiagramRow[]): SVGSVGElement {
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", `0 0 ${DIAGRAM_WIDTH} ${DIAGRAM_HEIGHT}`);
  svg.setAttribute("class", "mass-diagram");
  const sources = [...new Set(rows.map((row) => row.source))];
  const x = (value: number) => value * (DIAGRAM_WIDTH - 2) + 1;
  const y = (value: number) => DIAGRAM_HEIGHT - 4 - value * (DIAGRAM_HEIGHT - 8);
  sources.forEach((source, sourceIndex) => {
    const color = SOURCE_COLORS[sourceIndex % SOURCE_COLORS.length];
    let previousCumulative = 0;
    for (const row of rows.filter((r) => r.source === source)) {
      const rect = document.createElementNS("http://www.w3.org/2000/svg", "rect");
      rect.setAttribute("x", String(x(row.lower)));
      rect.setAttribute("width", String(Math.max(x(row.upper) - x(row.lower), 2)));
      rect.setAttribute("y", String(y(row.cumulative)));
      rect.setAttribute("height",
        String(Math.max(y(previousCumulative) - y(row.cumulative), 1)));
      rect.setAttribute("fill", color);
      rect.setAttribute("fill-opacity", "0.45");
      rect.setAttribute("data-source", source);
      const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
      title.textContent =
        `${source} [${row.lower}, ${row.upper}] mass ${row.mass}`;
      rect.appendChild(title);
      svg.appendChild(rect);
      previousCumulative = row.cumulative;
    }
  });
  return svg;
}

function renderEntry(entry: ResultEntry, digits: number): HTMLElement {
  const section = el("section", "result-entry");
  section.appendChild(el("h3", undefined,
    `${entry.component} / ${entry.indicator}`));

  if (entry.status !== "ok") {
    const error = entry.error;
    section.appendChild(el("p", "notice failure",
      `evaluation failed: total conflict at step ${error?.step} `
      + `(${error?.left} with ${error?.right}) — no combined result`));
    return section;
  }

  const steps = el("ul", "steps");
  for (const step of entry.steps ?? []) {
    steps.appendChild(el("li", undefined,
      `step ${step.step}: ${step.left} ⊕ ${step.right} — conflict `
      + `${formatNumber(step.conflict, digits)}, `
      + `K ${formatNumber(step.k, digits)}`));
  }
  section.appendChild(steps);

  const table = el("table", "estimates");
  const head = el("tr");
  for (const caption of ["rank", "interval", "term", "mass", "Bel", "Pl", ""]) {
    head.appendChild(el("th", undefined, caption));
  }
  table.appendChild(head);
  for (const estimate of entry.estimates ?? []) {
    const tr = el("tr", estimate.rank === 1 ? "top-estimate" : undefined);
    tr.appendChild(el("td", undefined, String(estimate.rank)));
    tr.appendChild(el("td", undefined,
      formatInterval(estimate.lower, estimate.upper, digits)));
    tr.appendChild(el("td", "term", estimate.term ?? "—"));
    tr.appendChild(el("td", undefined, formatNumber(estimate.mass, digits)));
    tr.appendChild(el("td", "bel", formatNumber(estimate.belief, digits)));
    tr.appendChild(el("td", "pl", formatNumber(estimate.plausibility, digits)));
    const bars = el("td", "bars");
    bars.appendChild(bar(estimate.belief, "bel-bar"));
    bars.appendChild(bar(estimate.plausibility, "pl-bar"));
    tr.appendChild(bars);
    table.appendChild(tr);
  }
  section.appendChild(table);

  if (entry.expectation) {
    section.appendChild(el("p", "expectation",
      "expectation bounds: "
      + formatInterval(entry.expectation.lower, entry.expectation.upper, digits)));
  }
  if (entry.diagram && entry.diagram.length > 0) {
    section.appendChild(el("h4", undefined, "cumulated source masses"));
    section.appendChild(renderDiagram(entry.diagram));
    const legend = el("p", "legend");
    const sources = [...new Set(entry.diagram.map((row) => row.source))];
    sources.forEach((source, index) => {
      const chip = el("span", "legend-chip", source);
      chip.style.borderColor = SOURCE_COLORS[index % SOURCE_COLORS.length];
      legend.appendChild(chip);
    });
    section.appendChild(legend);
  }
  return section;
}

export function renderResults(container: HTMLElement,
                              report: RunReport | null,
                              lastError: string | null): void {
  container.replaceChildren();
  if (lastError) {
    container.appendChild(el("p", "notice failure", lastError));
  }
  if (!report) {
    if (!lastError) {
      container.appendChild(el("p", "hint",
        "no evaluation yet: fill in the questionnaire and press evaluate"));
    }
    return;
  }
  const digits = report.metadata.round_digits;
  container.appendChild(el("p", "metadata",
    `semantics: ${report.metadata.semantics}; fusion order: `
    + report.metadata.fusion_order.join(" → ")));
  for (const entry of report.results) {
    container.appendChild(renderEntry(entry, digits));
  }
}
