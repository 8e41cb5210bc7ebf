import { MatrixDocument } from "./editor.js";

export interface ConsistencyBlock {
  lambda_max: number;
  ci: number;
  cr: number;
  ri: number;
  iterations: number;
  converged: boolean;
  acceptable: boolean;
}

export interface WeightsResponse {
  engine_version: string;
  labels: string[];
  weights: number[];
  consistency: ConsistencyBlock;
}

export interface RankingRow {
  doi: string;
  rank: number;
  score: number;
  values: Record<string, number>;
  normalized: Record<string, number>;
}

export interface RankingPayload {
  snapshot_date: string;
  phase: number | null;
  weights: { labels: string[]; weights: number[] };
  normalization_bounds: Record<string, [number, number]>;
  rows: RankingRow[];
}

export interface SnapshotInfo {
  id: string;
  snapshot_date: string;
  articles: number;
  metrics: string[];
}

export interface WhatifDelta {
  doi: string;
  baseline_rank: number;
  candidate_rank: number;
  delta: number;
}

export interface WhatifResponse {
  engine_version: string;
  phase: number | null;
  baseline: RankingPayload;
  candidate: RankingPayload;
  deltas: WhatifDelta[];
}

export interface BumpchartArticle {
  doi: string;
  trend: string;
  color: string;
  ranks: number[];
  scores: number[];
}

export interface BumpchartDocument {
  kind: string;
  snapshots: { snapshot_date: string; phase: number | null }[];
  articles: BumpchartArticle[];
}

export interface DynamicsResponse {
  engine_version: string;
  trajectories: unknown[];
  trends: Record<string, { trend: string; color: string }>;
  bumpchart: BumpchartDocument;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
  ) {
    super(detail);
  }
}

async function asJson<T>(res: Response): Promise<T> {
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    const rec = body as Record<string, string>;
    throw new ApiError(res.status, rec.error ?? "http_error",
                       rec.detail ?? `request failed with ${res.status}`);
  }
  return body as T;
}

/** Thin client over the scoring service; every number shown in the UI comes
 *  from one of these responses. */
export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async postWeights(matrix: MatrixDocument): Promise<WeightsResponse> {
    const res = await fetch(this.url("/api/weights"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ matrix }),
    });
    return asJson<WeightsResponse>(res);
  }

  async listSnapshots(): Promise<SnapshotInfo[]> {
    const res = await fetch(this.url("/api/snapshots"));
    const body = await asJson<{ snapshots: SnapshotInfo[] }>(res);
    return body.snapshots;
  }

  async postWhatif(matrix: MatrixDocument, snapshotId: string): Promise<WhatifResponse> {
    const res = await fetch(this.url("/api/whatif"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ matrix, snapshot_id: snapshotId }),
    });
    return asJson<WhatifResponse>(res);
  }

  async getDynamics(): Promise<DynamicsResponse> {
    const res = await fetch(this.url("/api/dynamics"));
    return asJson<DynamicsResponse>(res);
  }
}
