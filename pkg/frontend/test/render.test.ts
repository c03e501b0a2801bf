import { describe, expect, it } from "vitest";

import type { Association } from "../src/api.js";
import {
  esc,
  nodeAngle,
  renderApp,
  renderBreadcrumb,
  renderCenterView,
  renderDocuments,
  renderErrorBanner,
} from "../src/render.js";
import { applyCenter, applyDocuments, applyDocumentsError, applyError, endPath, initialState } from "../src/state.js";

const EDGES: Association[] = [
  { theme_id: "NLP", label: "Natural Language Processing", ad: 0.2068 },
  { theme_id: "Crypto", label: "Cryptography", ad: 0.125 },
];

function viewWith(edges: Association[]) {
  return applyCenter(initialState(), 1, "AES", "Application and Expert Systems", edges);
}

describe("center view rendering", () => {
  it("labels the center node with the centered theme", () => {
    const html = renderCenterView(viewWith(EDGES));
    expect(html).toContain("Application and Expert Systems");
    expect(html).toContain('data-role="center"');
  });

  it("labels every edge with its association degree to 4 decimals", () => {
    const html = renderCenterView(viewWith(EDGES));
    expect(html).toContain(">0.2068<");
    expect(html).toContain(">0.1250<");
  });

  it("renders one peripheral node per association, none invented", () => {
    const html = renderCenterView(viewWith(EDGES));
    const ids = [...html.matchAll(/data-theme="([^"]+)" data-role="peripheral"/g)].map(
      (m) => m[1],
    );
    expect(new Set(ids)).toEqual(new Set(["NLP", "Crypto"]));
  });

  it("an isolated theme shows the center only and says so", () => {
    const html = renderCenterView(viewWith([]));
    expect(html).toContain("no associations");
    expect(html).not.toContain('data-role="peripheral"');
  });

  it("places peripherals deterministically, strongest association on top", () => {
    expect(nodeAngle(0, 4)).toBeCloseTo(-Math.PI / 2, 12);
    expect(nodeAngle(1, 4)).toBeCloseTo(0, 12);
    const first = renderCenterView(viewWith(EDGES));
    const second = renderCenterView(viewWith(EDGES));
    expect(first).toBe(second);
  });

  it("escapes markup in labels", () => {
    const html = renderCenterView(
      viewWith([{ theme_id: "X", label: "R&D <lab>", ad: 0.5 }]),
    );
    expect(html).toContain("R&amp;D &lt;lab&gt;");
    expect(html).not.toContain("<lab>");
    expect(esc(`"q" & 'p'`)).toBe("&quot;q&quot; &amp; &#39;p&#39;");
  });
});

describe("breadcrumb rendering", () => {
  it("lists the traversed labels in order with an end-path control", () => {
    let state = viewWith(EDGES);
    state = applyCenter(state, 2, "NLP", "Natural Language Processing", []);
    const html = renderBreadcrumb(state);
    expect(html).toMatch(
      /Application and Expert Systems.*Natural Language Processing/s,
    );
    expect(html).toContain('data-action="end-path"');
  });

  it("swaps the control for a notice once the path is ended", () => {
    const html = renderBreadcrumb(endPath(viewWith(EDGES)));
    expect(html).toContain("path ended");
    expect(html).not.toContain("data-action");
  });
});

describe("document panel rendering", () => {
  it("shows each document with its role badge and pertinence, in API order", () => {
    let state = viewWith(EDGES);
    state = applyDocuments(state, 2, "AES", "Application and Expert Systems", [
      { doc_id: "d_major", role: "major", pertinence: 0.41 },
      { doc_id: "d_minor", role: "minor", pertinence: 0.08 },
    ]);
    const html = renderDocuments(state);
    expect(html.indexOf("d_major")).toBeLessThan(html.indexOf("d_minor"));
    expect(html).toContain('class="badge major"');
    expect(html).toContain("0.41");
  });

  it("renders an unknown-theme panel on a 404", () => {
    let state = viewWith(EDGES);
    state = applyDocumentsError(state, 2, "Ghost", "unknown theme");
    expect(renderDocuments(state)).toContain("unknown theme");
  });
});

describe("error banner", () => {
  it("is absent when there is no error and present, escaped, when there is", () => {
    const ok = viewWith(EDGES);
    expect(renderErrorBanner(ok)).toBe("");
    const bad = applyError(ok, 2, "api <down>");
    expect(renderErrorBanner(bad)).toContain("api &lt;down&gt;");
    // the rest of the view is still rendered alongside the banner
    const page = renderApp(bad);
    expect(page).toContain("error-banner");
    expect(page).toContain("Application and Expert Systems");
  });
});
