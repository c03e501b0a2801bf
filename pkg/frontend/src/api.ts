/** Typed client for the themekit exploration API. */

export interface ThemeInfo {
  theme_id: string;
  label: string;
  weight: number;
}

export interface Association {
  theme_id: string;
  label: string;
  ad: number;
}

export interface DocumentRow {
  doc_id: string;
  role: "major" | "minor";
  pertinence: number;
}

export interface PathVerdict {
  valid: boolean;
  first_invalid_hop?: number;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  themesUrl(): string {
    return `${this.base}/api/themes`;
  }

  associationsUrl(themeId: string): string {
    return `${this.base}/api/themes/${encodeURIComponent(themeId)}/associations`;
  }

  documentsUrl(themeId: string): string {
    return `${this.base}/api/themes/${encodeURIComponent(themeId)}/documents`;
  }

  validateUrl(): string {
    return `${this.base}/api/paths/validate`;
  }

  private async get<T>(url: string): Promise<T> {
    const response = await this.fetchImpl(url);
    if (!response.ok) {
      throw new ApiError(response.status, await describeFailure(response));
    }
    return (await response.json()) as T;
  }

  listThemes(): Promise<ThemeInfo[]> {
    return this.get<ThemeInfo[]>(this.themesUrl());
  }

  associations(themeId: string): Promise<Association[]> {
    return this.get<Association[]>(this.associationsUrl(themeId));
  }

  documents(themeId: string): Promise<DocumentRow[]> {
    return this.get<DocumentRow[]>(this.documentsUrl(themeId));
  }

  async validatePath(path: string[]): Promise<PathVerdict> {
    const response = await this.fetchImpl(this.validateUrl(), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ path }),
    });
    if (!response.ok) {
      throw new ApiError(response.status, await describeFailure(response));
    }
    return (await response.json()) as PathVerdict;
  }
}

async function describeFailure(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: string };
    if (body && typeof body.detail === "string") {
      return body.detail;
    }
  } catch {
    // non-JSON error body; fall through to the generic message
  }
  return `request failed with status ${response.status}`;
}
