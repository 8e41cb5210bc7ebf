import { BumpchartDocument } from "./api.js";

const WIDTH = 760;
const ROW_HEIGHT = 26;
const MARGIN = { top: 28, right: 40, bottom: 16, left: 230 };

/**
 * Render the service's bump-chart document as SVG. Strictly a projection of
 * the payload: article order, ranks, colors and trend labels are used as
 * delivered, nothing is recomputed or re-sorted client-side.
 */
export function renderBumpchart(container: HTMLElement, doc: BumpchartDocument): void {
  container.textContent = "";
  if (doc.snapshots.length < 2) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "Need at least two snapshots to draw rank trajectories.";
    container.appendChild(empty);
    return;
  }

  const n = doc.articles.length;
  const phases = doc.snapshots.length;
  const height = MARGIN.top + MARGIN.bottom + ROW_HEIGHT * n;
  const innerWidth = WIDTH - MARGIN.left - MARGIN.right;
  const x = (k: number) => MARGIN.left + (phases === 1 ? 0 : (innerWidth * k) / (phases - 1));
  const y = (rank: number) => MARGIN.top + ROW_HEIGHT * (rank - 1) + ROW_HEIGHT / 2;

  const svgNS = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${height}`);
  svg.setAttribute("class", "bumpchart");

  doc.snapshots.forEach((snap, k) => {
    const label = document.createElementNS(svgNS, "text");
    label.setAttribute("x", String(x(k)));
    label.setAttribute("y", String(MARGIN.top - 10));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "axis-label");
    label.textContent = snap.phase === null
      ? snap.snapshot_date
      : `phase ${snap.phase} (${snap.snapshot_date})`;
    svg.appendChild(label);
  });

  doc.articles.forEach((article) => {
    const g = document.createElementNS(svgNS, "g");
    g.setAttribute("class", "series");
    g.dataset.doi = article.doi;
    g.dataset.trend = article.trend;
    g.dataset.ranks = article.ranks.join(",");

    const line = document.createElementNS(svgNS, "polyline");
    line.setAttribute(
      "points",
      article.ranks.map((rank, k) => `${x(k)},${y(rank)}`).join(" "),
    );
    line.setAttribute("fill", "none");
    line.setAttribute("stroke", article.color);
    line.setAttribute("stroke-width", "2");
    g.appendChild(line);

    article.ranks.forEach((rank, k) => {
      const dot = document.createElementNS(svgNS, "circle");
      dot.setAttribute("cx", String(x(k)));
      dot.setAttribute("cy", String(y(rank)));
      dot.setAttribute("r", "3");
      dot.setAttribute("fill", article.color);
      g.appendChild(dot);
    });

    const label = document.createElementNS(svgNS, "text");
    label.setAttribute("x", String(MARGIN.left - 8));
    label.setAttribute("y", String(y(article.ranks[0]) + 4));
    label.setAttribute("text-anchor", "end");
    label.setAttribute("class", "doi-label");
    label.textContent = `${article.ranks[0]}. ${article.doi}`;
    g.appendChild(label);

    svg.appendChild(g);
  });

  container.appendChild(svg);
}
