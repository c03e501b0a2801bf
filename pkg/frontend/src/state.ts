/** Pure view-state transitions for the theme navigator.
 *
 * The state is a value; every transition returns a fresh object, so a click
 * sequence replayed over the same workspace reproduces the exact same state
 * (and in particular the exact same breadcrumb). Responses carry the sequence
 * number of the request that triggered them; a response older than the last
 * applied one is discarded.
 */

import type { Association, DocumentRow } from "./api.js";

export interface ViewState {
  /** Theme id at the center of the node-link view; null before startup. */
  center: string | null;
  centerLabel: string;
  /** Association edges of the center, in API (descending degree) order. */
  edges: Association[];
  /** Traversed theme ids; the last entry is always the current center. */
  breadcrumb: string[];
  breadcrumbLabels: string[];
  /** Sequence number of the last applied response. */
  seq: number;
  /** Non-blocking error banner; the last good view stays rendered. */
  error: string | null;
  /** Document panel: rows for the docsTheme, or a panel-level error. */
  docsTheme: string | null;
  docsThemeLabel: string;
  docs: DocumentRow[];
  docsError: string | null;
  /** True once the user explicitly ended the thematic path. */
  pathEnded: boolean;
}

export function initialState(): ViewState {
  return {
    center: null,
    centerLabel: "",
    edges: [],
    breadcrumb: [],
    breadcrumbLabels: [],
    seq: 0,
    error: null,
    docsTheme: null,
    docsThemeLabel: "",
    docs: [],
    docsError: null,
    pathEnded: false,
  };
}

/** True when the response tagged seq belongs to an interaction older than
 * the last applied one and must be discarded. Responses sharing the applied
 * sequence number (one interaction, several fetches) stay valid. */
export function isStale(state: ViewState, seq: number): boolean {
  return seq < state.seq;
}

/**
 * Apply a recenter: the theme becomes the center and joins the breadcrumb
 * (unless it already is the center — recentering on the center is a no-op
 * upstream, but replays may still deliver it). Clears the error banner.
 */
export function applyCenter(
  state: ViewState,
  seq: number,
  themeId: string,
  label: string,
  edges: Association[],
): ViewState {
  if (isStale(state, seq)) {
    return state;
  }
  const breadcrumb =
    state.breadcrumb[state.breadcrumb.length - 1] === themeId
      ? state.breadcrumb
      : [...state.breadcrumb, themeId];
  const breadcrumbLabels =
    breadcrumb === state.breadcrumb
      ? state.breadcrumbLabels
      : [...state.breadcrumbLabels, label];
  return {
    ...state,
    center: themeId,
    centerLabel: label,
    edges,
    breadcrumb,
    breadcrumbLabels,
    seq,
    error: null,
    pathEnded: false,
  };
}

export function applyDocuments(
  state: ViewState,
  seq: number,
  themeId: string,
  label: string,
  rows: DocumentRow[],
): ViewState {
  if (isStale(state, seq)) {
    return state;
  }
  return {
    ...state,
    seq,
    docsTheme: themeId,
    docsThemeLabel: label,
    docs: rows,
    docsError: null,
  };
}

/** Document panel failed (e.g. unknown theme): keep the rest of the view. */
export function applyDocumentsError(
  state: ViewState,
  seq: number,
  themeId: string,
  message: string,
): ViewState {
  if (isStale(state, seq)) {
    return state;
  }
  return {
    ...state,
    seq,
    docsTheme: themeId,
    docsThemeLabel: themeId,
    docs: [],
    docsError: message,
  };
}

/** A fetch failed: show the banner, keep the last good view untouched. */
export function applyError(
  state: ViewState,
  seq: number,
  message: string,
): ViewState {
  if (isStale(state, seq)) {
    return state;
  }
  return { ...state, seq, error: message };
}

export function endPath(state: ViewState): ViewState {
  return { ...state, pathEnded: true };
}

/** The breadcrumb as downloadable structured text, one theme per line. */
export function breadcrumbText(state: ViewState): string {
  const lines = ["# thematic path"];
  for (let i = 0; i < state.breadcrumb.length; i++) {
    lines.push(`${state.breadcrumb[i]}\t${state.breadcrumbLabels[i]}`);
  }
  return lines.join("\n") + "\n";
}
