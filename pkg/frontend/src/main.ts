// Workbench wiring: panel switching, evaluate/import/export, state loop.
// Single-user and single-page; at most one evaluation request is in flight
// (the client aborts the previous one on resubmission).

import { ApiClient, ServiceFailure } from "./api.js";
import { exampleDocument } from "./fixtures.js";
import { renderQuestionnaire } from "./questionnaire.js";
import { renderResults } from "./resultsExplorer.js";
import { renderScaleEditor } from "./scaleEditor.js";
import {
  addAnswer,
  addGroup,
  addRating,
  canEvaluate,
  buildDocument,
  exportDocument,
  importDocument,
  initialState,
  removeAnswer,
  removeGroup,
  removeRating,
  updateGroup,
  updateRating,
} from "./state.js";
import type { Panel, WorkbenchState } from "./state.js";
import type { SourceDataDoc } from "./types.js";

let state: WorkbenchState = initialState();
const client = new ApiClient("http://127.0.0.1:8420");

function apply(next: WorkbenchState): void {
  state = next;
  render();
}

function byId<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function render(): void {
  for (const panel of ["scale", "questionnaire", "results"] as Panel[]) {
    byId(`panel-${panel}`).hidden = state.panel !== panel;
    byId(`nav-${panel}`).classList.toggle("active", state.panel === panel);
  }
  renderScaleEditor(byId("panel-scale"), state, {
    onAdd: (term, lower, upper) => apply(addRating(state, term, lower, upper)),
    onUpdate: (index, patch) => apply(updateRating(state, index, patch)),
    onRemove: (index) => apply(removeRating(state, index)),
  });
  renderQuestionnaire(byId("panel-questionnaire"), state, {
    onAddAnswer: (group, term, count) =>
      apply(addAnswer(state, group, term, count)),
    onRemoveAnswer: (group, term) => apply(removeAnswer(state, group, term)),
    onAddGroup: (name, count) => apply(addGroup(state, name, count)),
    onRemoveGroup: (index) => apply(removeGroup(state, index)),
    onUpdateGroup: (index, name, count) =>
      apply(updateGroup(state, index, { name, expertCount: count })),
  });
  renderResults(byId("panel-results"), state.report, state.lastError);
  byId<HTMLButtonElement>("evaluate").disabled = !canEvaluate(state);
  byId<HTMLInputElement>("component-name").value = state.componentName;
  byId<HTMLInputElement>("indicator-name").value = state.indicatorName;
}

async function evaluate(): Promise<void> {
  const doc = buildDocument(state);
  try {
    const report = await client.evaluate(doc);
    apply({ ...state, report, lastError: null, panel: "results" });
  } catch (failure) {
    if (failure instanceof DOMException && failure.name === "AbortError") {
      return; // superseded by a newer submission
    }
    if (failure instanceof ServiceFailure) {
      const detail = failure.payload.violations
        ?.map((violation) => `${violation.field}: ${violation.message}`)
        .join("; ");
      apply({
        ...state,
        report: failure.payload.report ?? null,
        lastError: `${failure.payload.error}${detail ? `: ${detail}` : ""}`,
        panel: "results",
      });
      return;
    }
    apply({
      ...state,
      report: null,
      lastError: `service unreachable: ${String(failure)}`,
      panel: "results",
    });
  }
}

function download(): void {
  const blob = new Blob([exportDocument(state)],
                        { type: "application/json" });
  const anchor = document.createElement("a");
  anchor.href = URL.createObjectURL(blob);
  anchor.download = "evaluation.json";
  anchor.click();
  URL.revokeObjectURL(anchor.href);
}

async function importFile(input: HTMLInputElement): Promise<void> {
  const file = input.files?.[0];
  if (!file) {
    return;
  }
  try {
    const doc = JSON.parse(await file.text()) as SourceDataDoc;
    apply(importDocument(state, doc));
  } catch (failure) {
    apply({ ...state, lastError: `import failed: ${String(failure)}` });
  }
  input.value = "";
}

export function bootstrap(): void {
  for (const panel of ["scale", "questionnaire", "results"] as Panel[]) {
    byId(`nav-${panel}`).addEventListener("click", () =>
      apply({ ...state, panel }));
  }
  byId("evaluate").addEventListener("click", () => void evaluate());
  byId("export").addEventListener("click", download);
  byId("load-example").addEventListener("click", () =>
    apply(importDocument(state, exampleDocument())));
  const fileInput = byId<HTMLInputElement>("import-file");
  fileInput.addEventListener("change", () => void importFile(fileInput));
  byId<HTMLInputElement>("service-url").addEventListener("change", (event) => {
    client.baseUrl = (event.target as HTMLInputElement).value;
  });
  byId<HTMLInputElement>("component-name").addEventListener("change", (event) =>
    apply({ ...state, componentName: (event.target as HTMLInputElement).value,
            dirty: true }));
  byId<HTMLInputElement>("indicator-name").addEventListener("change", (event) =>
    apply({ ...state, indicatorName: (event.target as HTMLInputElement).value,
            dirty: true }));
  render();
}

if (typeof document !== "undefined" && document.getElementById("workbench")) {
  bootstrap();
}
