/** Controller: wires the API client to the pure state/render layers.
 *
 * The mount only needs an innerHTML property, so the controller runs both in
 * the browser and inside integration tests without a DOM implementation.
 * Each user interaction takes one sequence number; whichever response comes
 * back for an older interaction than the last applied one is discarded.
 */

import { ApiClient, ApiError } from "./api.js";
import type { Association, ThemeInfo } from "./api.js";
import {
  applyCenter,
  applyDocuments,
  applyDocumentsError,
  applyError,
  breadcrumbText,
  endPath,
  initialState,
  isStale,
  type ViewState,
} from "./state.js";
import { renderApp } from "./render.js";

export interface Mount {
  innerHTML: string;
}

export class App {
  state: ViewState = initialState();
  private nextSeq = 1;
  private labels = new Map<string, string>();

  constructor(
    private readonly mount: Mount,
    private readonly api: ApiClient,
  ) {
    this.sync();
  }

  private sync(): void {
    this.mount.innerHTML = renderApp(this.state);
  }

  private labelOf(themeId: string): string {
    return this.labels.get(themeId) ?? themeId;
  }

  private rememberLabels(entries: { theme_id: string; label: string }[]): void {
    for (const entry of entries) {
      this.labels.set(entry.theme_id, entry.label);
    }
  }

  /** Load the theme list and center on the heaviest theme. */
  async start(): Promise<ThemeInfo[]> {
    const seq = this.nextSeq++;
    let themes: ThemeInfo[];
    try {
      themes = await this.api.listThemes();
    } catch (error) {
      this.state = applyError(this.state, seq, messageOf(error));
      this.sync();
      return [];
    }
    this.rememberLabels(themes);
    if (themes.length > 0) {
      await this.recenter(themes[0].theme_id);
    }
    return themes;
  }

  /**
   * Make the theme the center of the view: fetch its associations and its
   * document list, append it to the breadcrumb. Recentering on the current
   * center is a no-op.
   */
  async recenter(themeId: string): Promise<void> {
    if (themeId === this.state.center) {
      return;
    }
    const seq = this.nextSeq++;
    let edges: Association[];
    try {
      edges = await this.api.associations(themeId);
    } catch (error) {
      this.state = applyError(this.state, seq, messageOf(error));
      this.sync();
      return;
    }
    this.rememberLabels(edges);
    if (isStale(this.state, seq)) {
      return;
    }
    this.state = applyCenter(
      this.state,
      seq,
      themeId,
      this.labelOf(themeId),
      edges,
    );
    this.sync();
    await this.showDocuments(themeId, seq);
  }

  /** Fill the document panel for a theme (majors first, API order). */
  async showDocuments(themeId: string, seq?: number): Promise<void> {
    const docSeq = seq ?? this.nextSeq++;
    try {
      const rows = await this.api.documents(themeId);
      this.state = applyDocuments(
        this.state,
        docSeq,
        themeId,
        this.labelOf(themeId),
        rows,
      );
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        this.state = applyDocumentsError(
          this.state,
          docSeq,
          themeId,
          messageOf(error),
        );
      } else {
        this.state = applyError(this.state, docSeq, messageOf(error));
      }
    }
    this.sync();
  }

  /** Close the thematic path and hand back its downloadable text form. */
  finishPath(): string {
    this.state = endPath(this.state);
    this.sync();
    return breadcrumbText(this.state);
  }
}

function messageOf(error: unknown): string {
  if (error instanceof ApiError) {
    return `${error.message} (${error.status})`;
  }
  if (error instanceof Error) {
    return error.message;
  }
  return String(error);
}
