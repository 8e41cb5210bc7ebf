import { describe, expect, it } from "vitest";

import { WhatifResponse } from "../src/api.js";
import { articleDetail, directionOf, whatifRows } from "../src/whatif.js";

function makeResponse(deltas: [string, number, number][]): WhatifResponse {
  return {
    engine_version: "0.1.0",
    phase: 1,
    baseline: { snapshot_date: "2012-10-10", phase: 1,
                weights: { labels: [], weights: [] },
                normalization_bounds: {}, rows: [] },
    candidate: {
      snapshot_date: "2012-10-10",
      phase: 1,
      weights: { labels: [], weights: [] },
      normalization_bounds: {},
      rows: deltas.map(([doi, , candidate]) => ({
        doi,
        rank: candidate,
        score: 0.5,
        values: { citations: 3, twitter: 12 },
        normalized: { citations: 1, twitter: 0.25 },
      })),
    },
    deltas: deltas.map(([doi, baseline, candidate]) => ({
      doi,
      baseline_rank: baseline,
      candidate_rank: candidate,
      delta: baseline - candidate,
    })),
  };
}

describe("what-if view model", () => {
  it("maps delta signs onto directions", () => {
    expect(directionOf(3)).toBe("up");
    expect(directionOf(-2)).toBe("down");
    expect(directionOf(0)).toBe("flat");
  });

  it("builds rows straight from service deltas", () => {
    const rows = whatifRows(makeResponse([["10.1/a", 5, 2], ["10.1/b", 2, 5], ["10.1/c", 1, 1]]));
    expect(rows.map((r) => [r.doi, r.delta, r.direction, r.arrow])).toEqual([
      ["10.1/a", 3, "up", "↑"],
      ["10.1/b", -3, "down", "↓"],
      ["10.1/c", 0, "flat", "="],
    ]);
  });

  it("identity what-if yields all-flat rows", () => {
    const rows = whatifRows(makeResponse([["10.1/a", 1, 1], ["10.1/b", 2, 2]]));
    expect(rows.every((r) => r.delta === 0 && r.direction === "flat")).toBe(true);
  });

  it("exposes raw and normalized values for a picked article", () => {
    const detail = articleDetail(makeResponse([["10.1/a", 1, 1]]), "10.1/a");
    expect(detail).toEqual([
      { metric: "citations", raw: 3, normalized: 1 },
      { metric: "twitter", raw: 12, normalized: 0.25 },
    ]);
    expect(articleDetail(makeResponse([["10.1/a", 1, 1]]), "10.1/nope")).toBeNull();
  });
});
