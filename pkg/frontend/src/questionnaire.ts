// Per-group questionnaire: pick a term, enter how many experts chose it.
// Entering the same term twice merges (counts summed). Running totals are
// validated against the group size: over-allocation is flagged immediately
// and blocks evaluation, under-allocation only notes that the remaining
// experts will count as vacuous (no-opinion) evidence.

import { groupTotal, overAllocated } from "./state.js";
import type { WorkbenchState } from "./state.js";

export interface QuestionnaireEvents {
  onAddAnswer(groupIndex: number, term: string, count: number): void;
  onRemoveAnswer(groupIndex: number, term: string): void;
  onAddGroup(name: string, expertCount: number): void;
  onRemoveGroup(groupIndex: number): void;
  onUpdateGroup(groupIndex: number, name: string, expertCount: number): void;
}

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

export function renderQuestionnaire(container: HTMLElement,
                                    state: WorkbenchState,
                                    events: QuestionnaireEvents): void {
  container.replaceChildren();
  if (state.scale.length === 0) {
    container.appendChild(el("p", "hint",
      "define the rating scale before entering assessments"));
    return;
  }

  state.groups.forEach((group, groupIndex) => {
    const section = el("fieldset", "group");
    const legend = el("legend");
    const nameInput = el("input");
    nameInput.value = group.name;
    const sizeInput = el("input");
    sizeInput.type = "number";
    sizeInput.min = "1";
    sizeInput.value = String(group.expertCount);
    const apply = () => events.onUpdateGroup(
      groupIndex, nameInput.value, Number(sizeInput.value));
    nameInput.addEventListener("change", apply);
    sizeInput.addEventListener("change", apply);
    const removeGroup = el("button", undefined, "remove group");
    removeGroup.addEventListener("click", () => events.onRemoveGroup(groupIndex));
    legend.append(nameInput, sizeInput, removeGroup);
    section.appendChild(legend);

    const list = el("ul", "answers");
    for (const row of state.answers[groupIndex]) {
      const item = el("li", undefined, `${row.term}: ${row.count}`);
      const remove = el("button", undefined, "x");
      remove.addEventListener("click", () =>
        events.onRemoveAnswer(groupIndex, row.term));
      item.appendChild(remove);
      list.appendChild(item);
    }
    section.appendChild(list);

    const entry = el("div", "answer-entry");
    const termSelect = el("select");
    for (const row of state.scale) {
      const option = el("option", undefined, row.term);
      option.value = row.term;
      termSelect.appendChild(option);
    }
    const countInput = el("input");
    countInput.type = "number";
    countInput.min = "1";
    countInput.value = "1";
    const addButton = el("button", undefined, "add");
    addButton.addEventListener("click", () => {
      const count = Number(countInput.value);
      if (termSelect.value && count >= 1) {
        events.onAddAnswer(groupIndex, termSelect.value, count);
      }
    });
    entry.append(termSelect, countInput, addButton);
    section.appendChild(entry);

    const total = groupTotal(state, groupIndex);
    const over = overAllocated(state, groupIndex);
    const totals = el(
      "p",
      over ? "totals over-allocated" : "totals",
      `${total} / ${group.expertCount} experts allocated`,
    );
    section.appendChild(totals);
    if (over) {
      section.appendChild(el("p", "issue",
        "more votes than experts in the group: remove "
        + `${total - group.expertCount} before evaluating`));
    } else if (total < group.expertCount) {
      section.appendChild(el("p", "hint vacuous-note",
        `${group.expertCount - total} expert(s) without an assessment will `
        + "be exported as vacuous evidence on the whole scale"));
    }
    container.appendChild(section);
  });

  const addGroup = el("div", "add-group");
  const nameInput = el("input");
  nameInput.placeholder = "group name";
  const sizeInput = el("input");
  sizeInput.type = "number";
  sizeInput.min = "1";
  sizeInput.value = "10";
  const button = el("button", undefined, "add group");
  button.addEventListener("click", () => {
    if (nameInput.value.trim()) {
      events.onAddGroup(nameInput.value.trim(), Number(sizeInput.value));
    }
  });
  addGroup.append(nameInput, sizeInput, button);
  container.appendChild(addGroup);
}
