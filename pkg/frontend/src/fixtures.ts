// The bundled example survey: three groups of 120, 80 and 50 experts rating
// one component on a thirteen-term scale. Matches the evaluation service's
// own demo document, so "load example" plus evaluate reproduces the known
// reference outcome (top estimate "основная № 3").

import type { RatingEntry, SourceDataDoc } from "./types.js";

const SCALE: Array<[string, number, number]> = [
  ["основная № 1", 0.0, 0.33],
  ["основная № 2", 0.34, 0.66],
  ["основная № 3", 0.67, 1.0],
  ["вспомогательная № 1", 0.0, 0.11],
  ["вспомогательная № 2", 0.12, 0.22],
  ["вспомогательная № 3", 0.23, 0.33],
  ["вспомогательная № 4", 0.34, 0.44],
  ["вспомогательная № 5", 0.45, 0.55],
  ["вспомогательная № 6", 0.56, 0.66],
  ["вспомогательная № 7", 0.67, 0.77],
  ["вспомогательная № 8", 0.78, 0.88],
  ["вспомогательная № 9", 0.89, 1.0],
  ["нулевая оценка", 0.0, 0.0],
];

export const EXAMPLE_ANSWERS: Record<string, Array<[string, number]>> = {
  A: [
    ["основная № 1", 10],
    ["основная № 2", 5],
    ["вспомогательная № 9", 10],
    ["основная № 3", 20],
    ["вспомогательная № 8", 5],
    ["вспомогательная № 3", 15],
    ["вспомогательная № 5", 15],
    ["вспомогательная № 2", 5],
    ["вспомогательная № 7", 15],
    ["вспомогательная № 4", 5],
    ["вспомогательная № 6", 5],
    ["вспомогательная № 1", 5],
    ["нулевая оценка", 5],
  ],
  B: [
    ["вспомогательная № 4", 10],
    ["вспомогательная № 8", 5],
    ["основная № 2", 20],
    ["основная № 1", 15],
    ["вспомогательная № 5", 5],
    ["основная № 3", 20],
    ["вспомогательная № 9", 5],
  ],
  C: [
    ["вспомогательная № 9", 10],
    ["вспомогательная № 1", 5],
    ["вспомогательная № 7", 5],
    ["вспомогательная № 6", 5],
    ["нулевая оценка", 10],
    ["основная № 2", 5],
    ["основная № 3", 5],
    ["вспомогательная № 8", 5],
  ],
};

export function exampleScale(): RatingEntry[] {
  return SCALE.map(([term, lower, upper]) => ({
    Lingvo: term, LBound: lower, UBound: upper,
  }));
}

export function exampleDocument(): SourceDataDoc {
  const scale = exampleScale();
  const byTerm = new Map(scale.map((entry) => [entry.Lingvo, entry]));
  const groups = Object.entries(EXAMPLE_ANSWERS).map(([name, rows]) => ({
    GroupName: name,
    ExperCount: rows.reduce((sum, [, count]) => sum + count, 0),
  }));
  const results: RatingEntry[] = [];
  for (const rows of Object.values(EXAMPLE_ANSWERS)) {
    for (const [term, count] of rows) {
      const entry = byTerm.get(term)!;
      for (let expert = 0; expert < count; expert += 1) {
        results.push({ ...entry });
      }
    }
  }
  return {
    ComponentNumber: 1,
    IndicatorNumber: 1,
    ExpGroupsNumber: groups.length,
    EstimatesNumber: scale.length,
    RoundDigsNumber: 2,
    InterviewNumber: results.length,
    ComponentNames: ["Техническое решение"],
    IndicatorNames: ["Инновационность"],
    ExpertGroupes: groups,
    EstimateScale: scale,
    InterviewRslt: results,
  };
}
