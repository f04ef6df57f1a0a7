/**
 * Query playground: run a request against the saved schema and show the
 * response next to the Gremlin it compiled to.
 */

import type { RequestProblem, SchemaApi } from "./api.js";
import type { PlaygroundState } from "./state.js";

/** Point at a position inside the query text, editor-style. */
export function caretSnippet(query: string, problem: RequestProblem): string {
  if (problem.line === undefined || problem.column === undefined) return problem.message;
  const line = query.split("\n")[problem.line - 1] ?? "";
  const caret = " ".repeat(Math.max(0, problem.column - 1)) + "^";
  return `${line}\n${caret}\n${problem.message} (line ${problem.line}, column ${problem.column})`;
}

export async function runPlayground(
  api: SchemaApi,
  schemaId: string,
  query: string,
): Promise<PlaygroundState> {
  const [response, transpiled] = await Promise.all([
    api.graphql(schemaId, query),
    api.transpile(schemaId, query),
  ]);
  const problems = response.errors ?? [];
  const body =
    response.errors !== undefined
      ? response.errors.map((p) => caretSnippet(query, p)).join("\n\n")
      : JSON.stringify(response.data, null, 2);
  return {
    query,
    response: body,
    gremlin: transpiled.ok ? transpiled.gremlin : "",
    problems,
  };
}
