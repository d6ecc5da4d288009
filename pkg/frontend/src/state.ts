// Workbench state and its pure update functions. The draft always builds
// into a schema-valid document (unallocated experts are exported as
// full-frame "no opinion" answers); problems that cannot be auto-repaired,
// like inverted bounds, are surfaced as issues and block evaluation instead
// of being hidden.

import type { RatingEntry, RunReport, SourceDataDoc } from "./types.js";

export interface ScaleRow {
  term: string;
  lower: number;
  upper: number;
}

export interface GroupDraft {
  name: string;
  expertCount: number;
}

export interface AnswerRow {
  term: string;
  count: number;
}

export type Panel = "scale" | "questionnaire" | "results";

export interface WorkbenchState {
  componentName: string;
  indicatorName: string;
  roundDigits: number;
  scale: ScaleRow[];
  groups: GroupDraft[];
  answers: AnswerRow[][]; // parallel to groups
  panel: Panel;
  report: RunReport | null;
  lastError: string | null;
  importedDoc: SourceDataDoc | null; // verbatim import, exported while untouched
  dirty: boolean;
}

export interface ScaleIssue {
  index: number;
  message: string;
}

/** Reserved term used to export unallocated experts as vacuous evidence. */
export const NO_OPINION_TERM = "вся шкала (нет мнения)";

export function initialState(): WorkbenchState {
  return {
    componentName: "Объект",
    indicatorName: "Инновационность",
    roundDigits: 2,
    scale: [],
    groups: [{ name: "A", expertCount: 10 }],
    answers: [[]],
    panel: "scale",
    report: null,
    lastError: null,
    importedDoc: null,
    dirty: false,
  };
}

function touched(state: WorkbenchState, patch: Partial<WorkbenchState>): WorkbenchState {
  return { ...state, ...patch, dirty: true };
}

// --- scale editing --------------------------------------------------------

export function addRating(state: WorkbenchState, term: string,
                          lower: number, upper: number): WorkbenchState {
  return touched(state, { scale: [...state.scale, { term, lower, upper }] });
}

export function updateRating(state: WorkbenchState, index: number,
                             patch: Partial<ScaleRow>): WorkbenchState {
  const scale = state.scale.map((row, at) =>
    at === index ? { ...row, ...patch } : row);
  return touched(state, { scale });
}

export function removeRating(state: WorkbenchState, index: number): WorkbenchState {
  const removed = state.scale[index];
  const scale = state.scale.filter((_, at) => at !== index);
  const answers = state.answers.map((rows) =>
    rows.filter((row) => row.term !== removed?.term));
  return touched(state, { scale, answers });
}

export function scaleIssues(scale: ScaleRow[]): ScaleIssue[] {
  const issues: ScaleIssue[] = [];
  const seen = new Set<string>();
  scale.forEach((row, index) => {
    if (!row.term.trim()) {
      issues.push({ index, message: "term is empty" });
    } else if (seen.has(row.term)) {
      issues.push({ index, message: `duplicate term "${row.term}"` });
    }
    seen.add(row.term);
    if (row.lower > row.upper) {
      issues.push({ index, message: "lower bound exceeds upper bound" });
    }
    if (row.lower < 0 || row.upper > 1) {
      issues.push({ index, message: "bounds must stay within [0, 1]" });
    }
  });
  return issues;
}

/** Uncovered open regions of [0, 1]; presentational mirror of the axis. */
export function scaleGaps(scale: ScaleRow[]): Array<[number, number]> {
  const valid = scale
    .filter((row) => row.lower <= row.upper)
    .map((row) => [row.lower, row.upper] as [number, number])
    .sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  if (valid.length === 0) {
    return [[0, 1]];
  }
  const gaps: Array<[number, number]> = [];
  let coveredTo = 0;
  if (valid[0][0] > 0) {
    gaps.push([0, valid[0][0]]);
  }
  coveredTo = valid[0][1];
  for (const [lower, upper] of valid.slice(1)) {
    if (lower > coveredTo) {
      gaps.push([coveredTo, lower]);
    }
    coveredTo = Math.max(coveredTo, upper);
  }
  if (coveredTo < 1) {
    gaps.push([coveredTo, 1]);
  }
  return gaps;
}

// --- groups and questionnaire ----------------------------------------------

export function addGroup(state: WorkbenchState, name: string,
                         expertCount: number): WorkbenchState {
  return touched(state, {
    groups: [...state.groups, { name, expertCount }],
    answers: [...state.answers, []],
  });
}

export function removeGroup(state: WorkbenchState, index: number): WorkbenchState {
  return touched(state, {
    groups: state.groups.filter((_, at) => at !== index),
    answers: state.answers.filter((_, at) => at !== index),
  });
}

export function updateGroup(state: WorkbenchState, index: number,
                            patch: Partial<GroupDraft>): WorkbenchState {
  const groups = state.groups.map((group, at) =>
    at === index ? { ...group, ...patch } : group);
  return touched(state, { groups });
}

/** Add answers for a group; a repeated term merges by summing counts. */
export function addAnswer(state: WorkbenchState, groupIndex: number,
                          term: string, count: number): WorkbenchState {
  const answers = state.answers.map((rows, at) => {
    if (at !== groupIndex) {
      return rows;
    }
    const existing = rows.find((row) => row.term === term);
    if (existing) {
      return rows.map((row) =>
        row.term === term ? { ...row, count: row.count + count } : row);
    }
    return [...rows, { term, count }];
  });
  return touched(state, { answers });
}

export function removeAnswer(state: WorkbenchState, groupIndex: number,
                             term: string): WorkbenchState {
  const answers = state.answers.map((rows, at) =>
    at === groupIndex ? rows.filter((row) => row.term !== term) : rows);
  return touched(state, { answers });
}

export function groupTotal(state: WorkbenchState, groupIndex: number): number {
  return state.answers[groupIndex].reduce((sum, row) => sum + row.count, 0);
}

export function overAllocated(state: WorkbenchState, groupIndex: number): boolean {
  return groupTotal(state, groupIndex) > state.groups[groupIndex].expertCount;
}

export function canEvaluate(state: WorkbenchState): boolean {
  if (state.scale.length === 0 || scaleIssues(state.scale).length > 0) {
    return false;
  }
  if (state.groups.length === 0) {
    return false;
  }
  return state.groups.every((group, index) =>
    group.name.trim() !== "" && group.expertCount >= 1 && !overAllocated(state, index));
}

// --- document building / import / export ------------------------------------

function ratingEntry(row: ScaleRow): RatingEntry {
  return { Lingvo: row.term, LBound: row.lower, UBound: row.upper };
}

/**
 * Flatten the draft into the wire document: scale rows become
 * EstimateScale, each group's answers expand term-by-term into the flat
 * group-major InterviewRslt layout, and any unallocated experts receive the
 * reserved full-frame term so the document stays schema-valid.
 */
export function buildDocument(state: WorkbenchState): SourceDataDoc {
  const needsPadding = state.groups.some((group, index) =>
    groupTotal(state, index) < group.expertCount);
  const scale = state.scale.map(ratingEntry);
  if (needsPadding && !state.scale.some((row) => row.term === NO_OPINION_TERM)) {
    scale.push({ Lingvo: NO_OPINION_TERM, LBound: 0, UBound: 1 });
  }
  const byTerm = new Map(scale.map((entry) => [entry.Lingvo, entry]));
  const results: RatingEntry[] = [];
  state.groups.forEach((group, index) => {
    let filled = 0;
    for (const row of state.answers[index]) {
      const entry = byTerm.get(row.term);
      if (!entry) {
        continue; // answers for deleted terms are dropped by removeRating
      }
      for (let expert = 0; expert < row.count; expert += 1) {
        results.push({ ...entry });
      }
      filled += row.count;
    }
    const vacuous = byTerm.get(NO_OPINION_TERM);
    for (; filled < group.expertCount && vacuous; filled += 1) {
      results.push({ ...vacuous });
    }
  });
  return {
    ComponentNumber: 1,
    IndicatorNumber: 1,
    ExpGroupsNumber: state.groups.length,
    EstimatesNumber: scale.length,
    RoundDigsNumber: state.roundDigits,
    InterviewNumber: results.length,
    ComponentNames: [state.componentName],
    IndicatorNames: [state.indicatorName],
    ExpertGroupes: state.groups.map((group) => ({
      GroupName: group.name,
      ExperCount: group.expertCount,
    })),
    EstimateScale: scale,
    InterviewRslt: results,
  };
}

/** Exported text: the verbatim import while untouched, the draft otherwise. */
export function exportDocument(state: WorkbenchState): string {
  const doc = !state.dirty && state.importedDoc
    ? state.importedDoc
    : buildDocument(state);
  return JSON.stringify(doc, null, 2);
}

export function questionnaireEditable(doc: SourceDataDoc): boolean {
  return doc.ComponentNumber === 1 && doc.IndicatorNumber === 1;
}

/**
 * Load a document into the draft. Single-pair documents reconstruct the
 * questionnaire by slicing the group-major layout and merging repeated
 * terms; multi-pair documents stay evaluable/exportable but read-only.
 */
export function importDocument(state: WorkbenchState,
                               doc: SourceDataDoc): WorkbenchState {
  const scale: ScaleRow[] = doc.EstimateScale.map((entry) => ({
    term: entry.Lingvo, lower: entry.LBound, upper: entry.UBound,
  }));
  const groups: GroupDraft[] = doc.ExpertGroupes.map((entry) => ({
    name: entry.GroupName, expertCount: entry.ExperCount,
  }));
  const answers: AnswerRow[][] = groups.map(() => []);
  if (questionnaireEditable(doc)) {
    let offset = 0;
    groups.forEach((group, index) => {
      const slice = doc.InterviewRslt.slice(offset, offset + group.expertCount);
      const counts = new Map<string, number>();
      for (const entry of slice) {
        counts.set(entry.Lingvo, (counts.get(entry.Lingvo) ?? 0) + 1);
      }
      answers[index] = [...counts].map(([term, count]) => ({ term, count }));
      offset += group.expertCount;
    });
  }
  return {
    ...state,
    componentName: doc.ComponentNames[0] ?? "",
    indicatorName: doc.IndicatorNames[0] ?? "",
    roundDigits: doc.RoundDigsNumber,
    scale,
    groups,
    answers,
    report: null,
    lastError: null,
    importedDoc: doc,
    dirty: false,
  };
}

// --- display helpers ---------------------------------------------------------

/** Display rounding only; service payloads stay full precision. */
export function formatNumber(value: number, digits: number): string {
  return value.toFixed(digits);
}

export function formatInterval(lower: number, upper: number,
                               digits: number): string {
  return `[${formatNumber(lower, digits)}, ${formatNumber(upper, digits)}]`;
}

/** The conflict shown in the header: the final fusion step's conflict. */
export function displayedConflict(report: RunReport): number | null {
  for (const entry of report.results) {
    if (entry.status === "ok" && entry.steps && entry.steps.length > 0) {
      return entry.steps[entry.steps.length - 1].conflict;
    }
  }
  return null;
}
