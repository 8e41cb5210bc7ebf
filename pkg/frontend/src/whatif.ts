import { RankingRow, WhatifResponse } from "./api.js";

export type Direction = "up" | "down" | "flat";

export interface WhatifRowView {
  doi: string;
  baselineRank: number;
  candidateRank: number;
  delta: number;
  direction: Direction;
  arrow: string;
}

const ARROWS: Record<Direction, string> = { up: "↑", down: "↓", flat: "=" };

export function directionOf(delta: number): Direction {
  if (delta > 0) return "up";
  if (delta < 0) return "down";
  return "flat";
}

/** Table rows straight from the service deltas; no ranks are recomputed. */
export function whatifRows(response: WhatifResponse): WhatifRowView[] {
  return response.deltas.map((d) => {
    const direction = directionOf(d.delta);
    return {
      doi: d.doi,
      baselineRank: d.baseline_rank,
      candidateRank: d.candidate_rank,
      delta: d.delta,
      direction,
      arrow: ARROWS[direction],
    };
  });
}

export function articleDetail(
  response: WhatifResponse,
  doi: string,
): { metric: string; raw: number; normalized: number }[] | null {
  const row = response.candidate.rows.find((r: RankingRow) => r.doi === doi);
  if (!row) return null;
  return Object.keys(row.values).map((metric) => ({
    metric,
    raw: row.values[metric],
    normalized: row.normalized[metric],
  }));
}
