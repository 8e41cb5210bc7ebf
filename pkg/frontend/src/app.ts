import { ApiClient, ApiError, DynamicsResponse, WeightsResponse, WhatifResponse } from "./api.js";
import { renderBumpchart } from "./bumpchart.js";
import { MatrixEditorState } from "./editor.js";
import { METRIC_LABELS, PRESET_CODES } from "./presets.js";
import { SerialQueue } from "./queue.js";
import { JudgmentCode, SCALE_CODES, codeToText } from "./saaty.js";
import { articleDetail, whatifRows } from "./whatif.js";

export interface AppHandles {
  state: MatrixEditorState;
  root: HTMLElement;
  loadPreset(name: string): void;
  runWhatif(): Promise<void>;
  refreshDynamics(): Promise<void>;
  lastWeights(): WeightsResponse | null;
  lastWhatif(): WhatifResponse | null;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

/**
 * Judgment-elicitation console. Strictly a thin client: weights, scores,
 * deltas and trends all come from service responses and are rendered as-is.
 */
export function createApp(root: HTMLElement, client: ApiClient): AppHandles {
  const state = new MatrixEditorState([...METRIC_LABELS]);
  let weightsResponse: WeightsResponse | null = null;
  let whatifResponse: WhatifResponse | null = null;

  root.textContent = "";

  // --- judgments section -------------------------------------------------
  const editorSection = el("section", "editor");
  editorSection.appendChild(el("h2", undefined, "Pairwise judgments"));

  const presetBar = el("div", "presets");
  for (const name of Object.keys(PRESET_CODES)) {
    const button = el("button", "preset", `load ${name}`);
    button.dataset.preset = name;
    button.addEventListener("click", () => loadPreset(name));
    presetBar.appendChild(button);
  }
  const resetButton = el("button", "preset", "reset to 1s");
  resetButton.addEventListener("click", () => {
    state.loadCodes(new Array((state.n * (state.n - 1)) / 2).fill(1));
    syncGrid();
    requestWeights();
  });
  presetBar.appendChild(resetButton);
  editorSection.appendChild(presetBar);

  const table = el("table", "matrix");
  const head = el("tr");
  head.appendChild(el("th"));
  for (const label of state.labels) head.appendChild(el("th", undefined, label));
  table.appendChild(head);

  const selects = new Map<string, HTMLSelectElement>();
  for (let i = 0; i < state.n; i++) {
    const row = el("tr");
    row.appendChild(el("th", undefined, state.labels[i]));
    for (let j = 0; j < state.n; j++) {
      const cell = el("td");
      if (i === j) {
        cell.textContent = "1";
        cell.className = "diagonal";
      } else {
        const select = document.createElement("select");
        select.dataset.row = String(i);
        select.dataset.col = String(j);
        for (const code of SCALE_CODES) {
          const option = document.createElement("option");
          option.value = String(code);
          option.textContent = codeToText(code);
          select.appendChild(option);
        }
        select.addEventListener("change", () => {
          editJudgment(i, j, Number(select.value));
        });
        selects.set(`${i},${j}`, select);
        cell.appendChild(select);
      }
      row.appendChild(cell);
    }
    table.appendChild(row);
  }
  editorSection.appendChild(table);

  const banner = el("div", "banner hidden");
  editorSection.appendChild(banner);

  const crBadge = el("div", "cr-badge", "CR —");
  editorSection.appendChild(crBadge);

  const weightsPanel = el("div", "weights");
  editorSection.appendChild(weightsPanel);
  root.appendChild(editorSection);

  // --- what-if section ----------------------------------------------------
  const whatifSection = el("section", "whatif");
  whatifSection.appendChild(el("h2", undefined, "What-if ranking"));
  const snapshotSelect = document.createElement("select");
  snapshotSelect.className = "snapshot-picker";
  const runButton = el("button", "run-whatif", "compare against presets");
  runButton.addEventListener("click", () => void runWhatif());
  const whatifNotice = el("div", "notice hidden");
  const whatifTable = el("table", "whatif-table");
  const detailPanel = el("div", "article-detail");
  whatifSection.append(snapshotSelect, runButton, whatifNotice, whatifTable, detailPanel);
  root.appendChild(whatifSection);

  // --- dynamics section ---------------------------------------------------
  const dynamicsSection = el("section", "dynamics");
  dynamicsSection.appendChild(el("h2", undefined, "Rank trajectories"));
  const dynamicsButton = el("button", "refresh-dynamics", "load trajectories");
  dynamicsButton.addEventListener("click", () => void refreshDynamics());
  const chartContainer = el("div", "chart");
  dynamicsSection.append(dynamicsButton, chartContainer);
  root.appendChild(dynamicsSection);

  // --- behavior -----------------------------------------------------------
  const weightsQueue = new SerialQueue<WeightsResponse>(
    (response) => {
      weightsResponse = response;
      banner.classList.add("hidden");
      renderWeights(response);
    },
    () => {
      // keep local edits; flag that the numbers on screen are stale
      banner.textContent =
        "service unreachable — showing last served weights, edits kept locally";
      banner.classList.remove("hidden");
    },
  );

  function requestWeights(): void {
    const doc = state.toDocument();
    weightsQueue.submit(() => client.postWeights(doc));
  }

  function syncGrid(): void {
    for (const [key, select] of selects) {
      const [i, j] = key.split(",").map(Number);
      select.value = String(state.codeAt(i, j));
    }
  }

  function editJudgment(i: number, j: number, code: JudgmentCode): void {
    state.setJudgment(i, j, code);
    syncGrid();
    requestWeights();
  }

  function renderWeights(response: WeightsResponse): void {
    const cr = response.consistency.cr;
    crBadge.textContent = `CR ${cr.toFixed(4)}`;
    crBadge.classList.toggle("warn", cr > 0.1);
    weightsPanel.textContent = "";
    response.labels.forEach((label, k) => {
      const rowEl = el("div", "weight-row");
      rowEl.appendChild(el("span", "weight-label", label));
      const bar = el("div", "weight-bar");
      bar.style.width = `${(response.weights[k] * 100).toFixed(2)}%`;
      rowEl.appendChild(bar);
      rowEl.appendChild(el("span", "weight-value", response.weights[k].toFixed(4)));
      weightsPanel.appendChild(rowEl);
    });
  }

  function loadPreset(name: string): void {
    const codes = PRESET_CODES[name];
    if (!codes) throw new Error(`unknown preset ${name}`);
    state.loadCodes(codes);
    syncGrid();
    requestWeights();
  }

  async function loadSnapshotList(): Promise<void> {
    try {
      const snapshots = await client.listSnapshots();
      snapshotSelect.textContent = "";
      for (const snap of snapshots) {
        const option = document.createElement("option");
        option.value = snap.id;
        option.textContent = `${snap.id} (${snap.snapshot_date}, ${snap.articles} articles)`;
        snapshotSelect.appendChild(option);
      }
    } catch {
      whatifNotice.textContent = "could not list snapshots from the service";
      whatifNotice.classList.remove("hidden");
    }
  }

  function renderWhatif(response: WhatifResponse): void {
    whatifTable.textContent = "";
    const head = el("tr");
    for (const title of ["article", "preset rank", "candidate rank", "Δ", ""]) {
      head.appendChild(el("th", undefined, title));
    }
    whatifTable.appendChild(head);
    for (const row of whatifRows(response)) {
      const tr = el("tr", `delta-${row.direction}`);
      tr.dataset.doi = row.doi;
      tr.dataset.delta = String(row.delta);
      tr.appendChild(el("td", undefined, row.doi));
      tr.appendChild(el("td", undefined, String(row.baselineRank)));
      tr.appendChild(el("td", undefined, String(row.candidateRank)));
      tr.appendChild(el("td", undefined, String(row.delta)));
      tr.appendChild(el("td", "arrow", row.arrow));
      tr.addEventListener("click", () => renderDetail(row.doi));
      whatifTable.appendChild(tr);
    }
  }

  function renderDetail(doi: string): void {
    if (!whatifResponse) return;
    const detail = articleDetail(whatifResponse, doi);
    detailPanel.textContent = "";
    if (!detail) return;
    detailPanel.appendChild(el("h3", undefined, doi));
    const table = el("table", "detail-table");
    const head = el("tr");
    for (const title of ["metric", "raw", "normalized"]) {
      head.appendChild(el("th", undefined, title));
    }
    table.appendChild(head);
    for (const entry of detail) {
      const tr = el("tr");
      tr.appendChild(el("td", undefined, entry.metric));
      tr.appendChild(el("td", undefined, String(entry.raw)));
      tr.appendChild(el("td", undefined, entry.normalized.toFixed(4)));
      table.appendChild(tr);
    }
    detailPanel.appendChild(table);
  }

  async function runWhatif(): Promise<void> {
    whatifNotice.classList.add("hidden");
    const snapshotId = snapshotSelect.value;
    if (!snapshotId) {
      whatifNotice.textContent = "pick a snapshot first";
      whatifNotice.classList.remove("hidden");
      return;
    }
    try {
      whatifResponse = await client.postWhatif(state.toDocument(), snapshotId);
      renderWhatif(whatifResponse);
    } catch (error) {
      whatifNotice.textContent = error instanceof ApiError && error.status === 404
        ? `snapshot ${snapshotId} is not on the service`
        : `what-if failed: ${error instanceof Error ? error.message : error}`;
      whatifNotice.classList.remove("hidden");
    }
  }

  async function refreshDynamics(): Promise<void> {
    try {
      const response: DynamicsResponse = await client.getDynamics();
      renderBumpchart(chartContainer, response.bumpchart);
    } catch (error) {
      chartContainer.textContent = "";
      const message = error instanceof ApiError && error.code === "insufficient_snapshots"
        ? "Need at least two snapshots to draw rank trajectories."
        : `could not load trajectories: ${error instanceof Error ? error.message : error}`;
      chartContainer.appendChild(el("p", "empty-state", message));
    }
  }

  syncGrid();
  requestWeights();
  void loadSnapshotList();

  return {
    state,
    root,
    loadPreset,
    runWhatif,
    refreshDynamics,
    lastWeights: () => weightsResponse,
    lastWhatif: () => whatifResponse,
  };
}

const bootTarget = typeof document !== "undefined"
  ? document.getElementById("app")
  : null;
if (bootTarget) {
  createApp(bootTarget, new ApiClient());
}
