/**
 * Typed client for the fcakit HTTP service.
 *
 * Every call returns the parsed JSON body together with the HTTP status so
 * callers can branch on 409/422 without exceptions; only transport-level
 * failures reject.
 */

export interface ContextJson {
  objects: string[];
  attributes: string[];
  rows: string[];
}

export interface ConceptJson {
  extent: number[];
  intent: number[];
}

export interface LatticeJson {
  concepts: ConceptJson[];
  covers: [number, number][];
}

export interface ImplicationJson {
  premise: number[];
  conclusion: number[];
}

export interface QuestionJson {
  premise: string[];
  conclusion: string[];
  text: string;
}

export interface SessionStateJson {
  id: string;
  revision: number;
  phase: "awaiting_expert" | "done";
  attributes: string[];
  question: QuestionJson | null;
  accepted: ImplicationJson[];
  workingContext: ContextJson;
  base?: ImplicationJson[];
}

export interface AnswerRejection {
  reason: "does_not_violate" | "violates_accepted" | "duplicate_name";
  error: string;
}

export type AnswerBody =
  | { accept: true }
  | { counterexample: { name: string; attrs: string[] } };

export interface ApiResponse<T> {
  status: number;
  body: T;
}

export class ServiceClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    headers?: Record<string, string>,
  ): Promise<ApiResponse<T>> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: { "Content-Type": "application/json", ...headers },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    return { status: response.status, body: (await response.json()) as T };
  }

  createContext(context: ContextJson): Promise<ApiResponse<{ id: string }>> {
    return this.request("POST", "/contexts", context);
  }

  /** Upload a raw Burmeister .cxt payload. */
  async createContextCxt(cxtText: string): Promise<ApiResponse<{ id: string }>> {
    const response = await this.fetchImpl(this.baseUrl + "/contexts", {
      method: "POST",
      headers: { "Content-Type": "text/plain" },
      body: cxtText,
    });
    return { status: response.status, body: await response.json() };
  }

  getContext(id: string): Promise<ApiResponse<ContextJson>> {
    return this.request("GET", `/contexts/${id}`);
  }

  getLattice(id: string, depth?: number): Promise<ApiResponse<LatticeJson>> {
    const query = depth === undefined ? "" : `?depth=${depth}`;
    return this.request("GET", `/contexts/${id}/lattice${query}`);
  }

  getBase(id: string): Promise<ApiResponse<ImplicationJson[]>> {
    return this.request("GET", `/contexts/${id}/base`);
  }

  createSession(
    init: { attributes: string[] } | { contextId: string },
  ): Promise<ApiResponse<SessionStateJson>> {
    return this.request("POST", "/sessions", init);
  }

  getSession(id: string): Promise<ApiResponse<SessionStateJson>> {
    return this.request("GET", `/sessions/${id}`);
  }

  postAnswer(
    sessionId: string,
    expectedRevision: number,
    answer: AnswerBody,
  ): Promise<ApiResponse<SessionStateJson | AnswerRejection>> {
    return this.request("POST", `/sessions/${sessionId}/answer`, answer, {
      "X-Expected-Revision": String(expectedRevision),
    });
  }

  postFailureReport(body: {
    contextId: string;
    failureAttr: string;
    depth?: number;
  }): Promise<ApiResponse<{ failureAttr: string; clusters: { attrs: string[]; tests: string[] }[] }>> {
    return this.request("POST", "/reports/failures", body);
  }
}
