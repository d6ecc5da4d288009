// End-to-end flow against the real computation service: enter the example
// survey through the questionnaire state, evaluate over HTTP, check the
// displayed outcome, validate the exported document with the CLI, then
// narrow the whole scale and confirm the displayed conflict rises.

import { spawn, execFile } from "node:child_process";
import { mkdtemp, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { EXAMPLE_ANSWERS, exampleScale } from "../src/fixtures.js";
import {
  addAnswer,
  addGroup,
  addRating,
  buildDocument,
  canEvaluate,
  displayedConflict,
  exportDocument,
  formatNumber,
  importDocument,
  initialState,
  removeGroup,
  updateRating,
} from "../src/state.js";
import type { WorkbenchState } from "../src/state.js";

const PORT = 20000 + Math.floor(Math.random() * 5000);
const BASE = `http://127.0.0.1:${PORT}`;

let service: ReturnType<typeof spawn>;

async function waitForHealth(): Promise<void> {
  for (let attempt = 0; attempt < 50; attempt += 1) {
    try {
      const response = await fetch(`${BASE}/health`);
      if (response.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  throw new Error("computation service did not come up");
}

function runCli(args: string[]): Promise<number> {
  return new Promise((resolve) => {
    execFile("python3", ["-m", "innofuse.cli", ...args], (error) => {
      resolve(error && typeof error.code === "number" ? error.code : 0);
    });
  });
}

/** Fill the workbench the way an analyst would: scale first, then groups. */
function enterExampleSurvey(): WorkbenchState {
  let state = initialState();
  for (const entry of exampleScale()) {
    state = addRating(state, entry.Lingvo, entry.LBound, entry.UBound);
  }
  state = removeGroup(state, 0);
  let groupIndex = 0;
  for (const [name, rows] of Object.entries(EXAMPLE_ANSWERS)) {
    const expertCount = rows.reduce((sum, [, count]) => sum + count, 0);
    state = addGroup(state, name, expertCount);
    for (const [term, count] of rows) {
      state = addAnswer(state, groupIndex, term, count);
    }
    groupIndex += 1;
  }
  return state;
}

beforeAll(async () => {
  service = spawn("python3", ["-m", "innofuse.cli", "serve",
                              "--port", String(PORT)],
                  { stdio: "ignore" });
  await waitForHealth();
}, 30_000);

afterAll(() => {
  service?.kill();
});

describe("workbench against the live service", () => {
  it("questionnaire entry of the example survey yields the expected top "
     + "estimate with Bel displayed as 0.65", { timeout: 30_000 }, async () => {
    const state = enterExampleSurvey();
    expect(canEvaluate(state)).toBe(true);
    const doc = buildDocument(state);
    expect(doc.InterviewNumber).toBe(250);
    expect(doc.RoundDigsNumber).toBe(2);

    const client = new ApiClient(BASE);
    const report = await client.evaluate(doc);
    const entry = report.results[0];
    expect(entry.status).toBe("ok");
    const top = entry.estimates![0];
    expect(top.term).toBe("основная № 3");
    expect([top.lower, top.upper]).toEqual([0.67, 1.0]);
    expect(formatNumber(top.belief, report.metadata.round_digits))
      .toBe("0.65");
  });

  it("exported JSON passes CLI validation with exit 0",
     { timeout: 30_000 }, async () => {
    const state = enterExampleSurvey();
    const directory = await mkdtemp(join(tmpdir(), "workbench-"));
    const path = join(directory, "exported.json");
    await writeFile(path, exportDocument(state), "utf-8");
    expect(await runCli(["validate", path])).toBe(0);
  });

  it("untouched import evaluates identically to its export",
     { timeout: 30_000 }, async () => {
    const doc = buildDocument(enterExampleSurvey());
    const imported = importDocument(initialState(), doc);
    expect(JSON.parse(exportDocument(imported))).toEqual(doc);
  });

  it("narrowing every scale interval by 50% strictly increases the "
     + "displayed conflict", { timeout: 30_000 }, async () => {
    const client = new ApiClient(BASE);
    const baseline = enterExampleSurvey();
    const baselineReport = await client.evaluate(buildDocument(baseline));
    const baselineConflict = displayedConflict(baselineReport);
    expect(baselineConflict).not.toBeNull();

    let narrowed = baseline;
    baseline.scale.forEach((row, index) => {
      const center = (row.lower + row.upper) / 2;
      const quarter = (row.upper - row.lower) / 4;
      narrowed = updateRating(narrowed, index, {
        lower: center - quarter,
        upper: center + quarter,
      });
    });
    const narrowedReport = await client.evaluate(buildDocument(narrowed));
    const narrowedConflict = displayedConflict(narrowedReport);
    expect(narrowedConflict).not.toBeNull();
    expect(narrowedConflict!).toBeGreaterThan(baselineConflict!);

    const digits = narrowedReport.metadata.round_digits;
    expect(Number(formatNumber(narrowedConflict!, digits)))
      .toBeGreaterThan(Number(formatNumber(baselineConflict!, digits)));
  });
});
