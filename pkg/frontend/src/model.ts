/**
 * Local schema draft and the edit actions that mutate it.
 *
 * A draft mirrors the JSON schema document the service accepts: vertex
 * types and edge types, each with a stable local id, a label, and a
 * property list. Edit actions are pure functions returning fresh drafts
 * so the editor can treat state transitions as values.
 */

export type Datatype = "ID" | "String" | "Int" | "Float" | "Boolean";

export const DATATYPES: readonly Datatype[] = ["ID", "String", "Int", "Float", "Boolean"];

export interface PropertyDraft {
  key: string;
  datatype: Datatype;
  required: boolean;
}

export interface VertexDraft {
  id: string;
  label: string;
  properties: PropertyDraft[];
}

export interface EdgeDraft {
  id: string;
  label: string;
  source: string;
  target: string;
  properties: PropertyDraft[];
}

export interface SchemaDraft {
  vertices: VertexDraft[];
  edges: EdgeDraft[];
}

export function emptyDraft(): SchemaDraft {
  return { vertices: [], edges: [] };
}

/** Derive a stable local id from a label; ids never change on rename. */
function slugify(label: string, taken: Set<string>, fallback: string): string {
  let slug = label.toLowerCase().replace(/[^a-z0-9_]/g, "");
  if (!slug || !/^[a-z_]/.test(slug)) slug = fallback;
  if (!taken.has(slug)) return slug;
  let n = 2;
  while (taken.has(`${slug}${n}`)) n += 1;
  return `${slug}${n}`;
}

function vertexIds(draft: SchemaDraft): Set<string> {
  return new Set(draft.vertices.map((v) => v.id));
}

function edgeIds(draft: SchemaDraft): Set<string> {
  return new Set(draft.edges.map((e) => e.id));
}

export function findVertex(draft: SchemaDraft, id: string): VertexDraft | undefined {
  return draft.vertices.find((v) => v.id === id);
}

export function findEdge(draft: SchemaDraft, id: string): EdgeDraft | undefined {
  return draft.edges.find((e) => e.id === id);
}

export function addVertex(draft: SchemaDraft, label: string): { draft: SchemaDraft; id: string } {
  const id = slugify(label, vertexIds(draft), `v${draft.vertices.length + 1}`);
  const vertex: VertexDraft = { id, label, properties: [] };
  return { draft: { ...draft, vertices: [...draft.vertices, vertex] }, id };
}

export function renameVertex(draft: SchemaDraft, id: string, label: string): SchemaDraft {
  return {
    ...draft,
    vertices: draft.vertices.map((v) => (v.id === id ? { ...v, label } : v)),
  };
}

/** Removing a vertex also removes every edge touching it; a dangling
    endpoint cannot be drawn, so it cannot linger in the draft either. */
export function deleteVertex(draft: SchemaDraft, id: string): SchemaDraft {
  return {
    vertices: draft.vertices.filter((v) => v.id !== id),
    edges: draft.edges.filter((e) => e.source !== id && e.target !== id),
  };
}

export function drawEdge(
  draft: SchemaDraft,
  label: string,
  source: string,
  target: string,
): { draft: SchemaDraft; id: string } {
  if (!findVertex(draft, source)) throw new Error(`unknown source vertex '${source}'`);
  if (!findVertex(draft, target)) throw new Error(`unknown target vertex '${target}'`);
  const id = slugify(label, edgeIds(draft), `e${draft.edges.length + 1}`);
  const edge: EdgeDraft = { id, label, source, target, properties: [] };
  return { draft: { ...draft, edges: [...draft.edges, edge] }, id };
}

export function renameEdge(draft: SchemaDraft, id: string, label: string): SchemaDraft {
  return {
    ...draft,
    edges: draft.edges.map((e) => (e.id === id ? { ...e, label } : e)),
  };
}

export function deleteEdge(draft: SchemaDraft, id: string): SchemaDraft {
  return { ...draft, edges: draft.edges.filter((e) => e.id !== id) };
}

export type ElementKind = "vertex" | "edge";

function mapElement(
  draft: SchemaDraft,
  kind: ElementKind,
  id: string,
  fn: (props: PropertyDraft[]) => PropertyDraft[],
): SchemaDraft {
  if (kind === "vertex") {
    return {
      ...draft,
      vertices: draft.vertices.map((v) => (v.id === id ? { ...v, properties: fn(v.properties) } : v)),
    };
  }
  return {
    ...draft,
    edges: draft.edges.map((e) => (e.id === id ? { ...e, properties: fn(e.properties) } : e)),
  };
}

/** Duplicate keys are representable on purpose; the server reports them
    as violations on save rather than the editor second-guessing it. */
export function addProperty(
  draft: SchemaDraft,
  kind: ElementKind,
  id: string,
  key: string,
  datatype: Datatype,
  required: boolean,
): SchemaDraft {
  return mapElement(draft, kind, id, (props) => [...props, { key, datatype, required }]);
}

export function removeProperty(draft: SchemaDraft, kind: ElementKind, id: string, key: string): SchemaDraft {
  return mapElement(draft, kind, id, (props) => props.filter((p) => p.key !== key));
}

export function toggleRequired(draft: SchemaDraft, kind: ElementKind, id: string, key: string): SchemaDraft {
  return mapElement(draft, kind, id, (props) =>
    props.map((p) => (p.key === key ? { ...p, required: !p.required } : p)),
  );
}

export function setDatatype(
  draft: SchemaDraft,
  kind: ElementKind,
  id: string,
  key: string,
  datatype: Datatype,
): SchemaDraft {
  return mapElement(draft, kind, id, (props) =>
    props.map((p) => (p.key === key ? { ...p, datatype } : p)),
  );
}

/** The JSON document the service accepts; layout stays client-side. */
export function documentOf(draft: SchemaDraft): object {
  return {
    vertices: draft.vertices.map((v) => ({
      id: v.id,
      label: v.label,
      properties: v.properties.map((p) => ({ ...p })),
    })),
    edges: draft.edges.map((e) => ({
      id: e.id,
      label: e.label,
      source: e.source,
      target: e.target,
      properties: e.properties.map((p) => ({ ...p })),
    })),
  };
}

/** Rebuild a draft from a fetched schema document. */
export function draftOf(document: {
  vertices: VertexDraft[];
  edges: EdgeDraft[];
}): SchemaDraft {
  return {
    vertices: document.vertices.map((v) => ({
      id: v.id,
      label: v.label,
      properties: v.properties.map((p) => ({ ...p })),
    })),
    edges: document.edges.map((e) => ({
      id: e.id,
      label: e.label,
      source: e.source,
      target: e.target,
      properties: e.properties.map((p) => ({ ...p })),
    })),
  };
}

const IDENTIFIER = /^[A-Za-z_][A-Za-z0-9_]*$/;

/** Typing aid only; every authoritative check happens on the server. */
export function identifierHint(text: string): string | null {
  if (IDENTIFIER.test(text)) return null;
  return "identifiers start with a letter or underscore and continue with letters, digits, or underscores";
}
