/**
 * Typed client for the schema service REST endpoints.
 *
 * Every editor capability goes through this class; the editor holds no
 * schema semantics of its own.
 */

export interface SchemaListing {
  id: string;
  vertices: number;
  edges: number;
}

export interface Violation {
  rule: string;
  subject: string;
  message: string;
}

export interface RequestProblem {
  message: string;
  line?: number;
  column?: number;
}

export interface Counters {
  s: number;
  w: number;
  k: number;
  d: number;
  fieldVisits: number;
}

export interface TranspileSuccess {
  ok: true;
  gremlin: string;
  counters: Counters;
}

export interface TranspileFailure {
  ok: false;
  errors: RequestProblem[];
}

export interface GraphQLResponse {
  data: unknown;
  errors?: RequestProblem[];
}

export type SaveOutcome =
  | { kind: "saved"; id: string; storeCleared: boolean }
  | { kind: "invalid"; violations: Violation[] }
  | { kind: "unreachable"; message: string };

function unreachable(err: unknown): SaveOutcome {
  return { kind: "unreachable", message: err instanceof Error ? err.message : String(err) };
}

export class SchemaApi {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async list(): Promise<SchemaListing[]> {
    const res = await fetch(this.url("/schemas"));
    const body = (await res.json()) as { schemas: SchemaListing[] };
    return body.schemas;
  }

  async create(document: object): Promise<SaveOutcome> {
    let res: Response;
    try {
      res = await fetch(this.url("/schemas"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(document),
      });
    } catch (err) {
      return unreachable(err);
    }
    if (res.status === 201) {
      const body = (await res.json()) as { id: string };
      return { kind: "saved", id: body.id, storeCleared: false };
    }
    const body = (await res.json()) as { violations: Violation[] };
    return { kind: "invalid", violations: body.violations };
  }

  async replace(id: string, document: object): Promise<SaveOutcome> {
    let res: Response;
    try {
      res = await fetch(this.url(`/schemas/${id}`), {
        method: "PUT",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(document),
      });
    } catch (err) {
      return unreachable(err);
    }
    if (res.ok) {
      return {
        kind: "saved",
        id,
        storeCleared: res.headers.get("X-Store-Cleared") === "true",
      };
    }
    const body = (await res.json()) as { violations: Violation[] };
    return { kind: "invalid", violations: body.violations };
  }

  async get(id: string): Promise<unknown> {
    const res = await fetch(this.url(`/schemas/${id}`));
    if (!res.ok) throw new Error(`schema ${id} not found`);
    return res.json();
  }

  async remove(id: string): Promise<void> {
    await fetch(this.url(`/schemas/${id}`), { method: "DELETE" });
  }

  async fetchSdl(id: string): Promise<string> {
    const res = await fetch(this.url(`/schemas/${id}/sdl`));
    if (!res.ok) throw new Error(`schema ${id} not found`);
    return res.text();
  }

  async transpile(
    id: string,
    query: string,
    options: { variables?: object; operationName?: string; flavor?: string } = {},
  ): Promise<TranspileSuccess | TranspileFailure> {
    const res = await fetch(this.url(`/schemas/${id}/transpile`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ query, ...options }),
    });
    const body = await res.json();
    if (res.ok) {
      return { ok: true, gremlin: body.gremlin, counters: body.counters };
    }
    return { ok: false, errors: body.errors };
  }

  async graphql(
    id: string,
    query: string,
    options: { variables?: object; operationName?: string } = {},
  ): Promise<GraphQLResponse> {
    const res = await fetch(this.url(`/schemas/${id}/graphql`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ query, ...options }),
    });
    return (await res.json()) as GraphQLResponse;
  }
}
