/** Pure HTML/SVG builders: (view state) -> markup string.
 *
 * Keeping rendering side-effect free lets tests compare the rendered edge
 * set against API responses directly, and keeps every displayed number a
 * formatted copy of an API value — nothing is recomputed client-side.
 */

import type { ViewState } from "./state.js";

const WIDTH = 820;
const HEIGHT = 560;
const CX = WIDTH / 2;
const CY = HEIGHT / 2;
const RADIUS = 200;
const NODE_R = 14;
const CENTER_R = 18;

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

/** Angle of peripheral node i of n: top of the circle, then clockwise.
 * Edges arrive sorted by descending association degree, so placement is
 * deterministic: the strongest association sits at twelve o'clock. */
export function nodeAngle(index: number, count: number): number {
  return -Math.PI / 2 + (2 * Math.PI * index) / count;
}

export function nodePosition(index: number, count: number): [number, number] {
  const angle = nodeAngle(index, count);
  return [CX + RADIUS * Math.cos(angle), CY + RADIUS * Math.sin(angle)];
}

export function renderCenterView(state: ViewState): string {
  if (state.center === null) {
    return `<p class="placeholder">Loading themes…</p>`;
  }
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" aria-label="theme graph">`,
  );
  const n = state.edges.length;
  state.edges.forEach((edge, i) => {
    const [x, y] = nodePosition(i, n);
    const lx = (CX + x) / 2;
    const ly = (CY + y) / 2;
    parts.push(
      `<line class="edge" x1="${CX}" y1="${CY}" x2="${fmt(x)}" y2="${fmt(y)}" />`,
      `<text class="edge-label" x="${fmt(lx)}" y="${fmt(ly - 6)}" text-anchor="middle">${edge.ad.toFixed(4)}</text>`,
    );
  });
  parts.push(
    `<circle class="center-node" cx="${CX}" cy="${CY}" r="${CENTER_R}" data-theme="${esc(state.center)}" data-role="center" />`,
    `<text class="center-label" x="${CX}" y="${CY + CENTER_R + 18}" text-anchor="middle">${esc(state.centerLabel)}</text>`,
  );
  state.edges.forEach((edge, i) => {
    const [x, y] = nodePosition(i, n);
    parts.push(
      `<circle class="node" cx="${fmt(x)}" cy="${fmt(y)}" r="${NODE_R}" data-theme="${esc(edge.theme_id)}" data-role="peripheral" />`,
      `<text class="node-label" x="${fmt(x)}" y="${fmt(y + NODE_R + 16)}" text-anchor="middle" data-theme="${esc(edge.theme_id)}" data-role="peripheral">${esc(edge.label)}</text>`,
    );
  });
  parts.push(`</svg>`);
  if (n === 0) {
    parts.push(`<p class="notice">no associations</p>`);
  }
  return parts.join("\n");
}

export function renderBreadcrumb(state: ViewState): string {
  if (state.breadcrumb.length === 0) {
    return `<nav class="breadcrumb"></nav>`;
  }
  const items = state.breadcrumbLabels
    .map((label) => `<li>${esc(label)}</li>`)
    .join("");
  const ended = state.pathEnded
    ? `<span class="path-ended">path ended</span>`
    : `<button type="button" data-action="end-path">End path</button>`;
  return `<nav class="breadcrumb"><ol>${items}</ol>${ended}</nav>`;
}

export function renderDocuments(state: ViewState): string {
  if (state.docsTheme === null) {
    return `<section class="documents"></section>`;
  }
  if (state.docsError !== null) {
    return `<section class="documents"><h2>unknown theme</h2><p>${esc(state.docsError)}</p></section>`;
  }
  const rows = state.docs
    .map(
      (row) =>
        `<tr><td>${esc(row.doc_id)}</td><td><span class="badge ${row.role}">${row.role}</span></td><td>${row.pertinence}</td></tr>`,
    )
    .join("");
  const body = state.docs.length
    ? `<table><thead><tr><th>document</th><th>role</th><th>pertinence</th></tr></thead><tbody>${rows}</tbody></table>`
    : `<p class="notice">no documents</p>`;
  return `<section class="documents"><h2>Documents of ${esc(state.docsThemeLabel)}</h2>${body}</section>`;
}

export function renderErrorBanner(state: ViewState): string {
  if (state.error === null) {
    return "";
  }
  return `<div class="error-banner" role="alert">${esc(state.error)}</div>`;
}

export function renderApp(state: ViewState): string {
  return [
    renderErrorBanner(state),
    renderBreadcrumb(state),
    `<main class="graph">${renderCenterView(state)}</main>`,
    renderDocuments(state),
  ].join("\n");
}

function fmt(value: number): string {
  return value.toFixed(2);
}
