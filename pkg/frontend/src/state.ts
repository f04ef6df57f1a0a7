/**
 * Editor state and the save cycle.
 *
 * The draft lives locally; Save pushes it to the service and folds the
 * answer back in: a fresh SDL preview on success, violations pinned to
 * their elements on rejection, a banner when the service is down. Any
 * edit clears the violation list so markers never describe a draft
 * other than the one on screen.
 */

import type { RequestProblem, SaveOutcome, SchemaApi, Violation } from "./api.js";
import { documentOf, emptyDraft, type ElementKind, type SchemaDraft } from "./model.js";

export type Selection =
  | { kind: ElementKind; id: string }
  | { kind: "property"; element: ElementKind; id: string; key: string };

export interface PlaygroundState {
  query: string;
  response: string;
  gremlin: string;
  problems: RequestProblem[];
}

export interface EditorState {
  draft: SchemaDraft;
  schemaId: string | null;
  selection: Selection | null;
  violations: Violation[];
  sdlPreview: string;
  banner: string | null;
  storeCleared: boolean;
  playground: PlaygroundState;
}

export function initialState(): EditorState {
  return {
    draft: emptyDraft(),
    schemaId: null,
    selection: null,
    violations: [],
    sdlPreview: "",
    banner: null,
    storeCleared: false,
    playground: { query: "", response: "", gremlin: "", problems: [] },
  };
}

/** Run one edit action; stale markers and banners go with it. */
export function applyEdit(state: EditorState, edit: (draft: SchemaDraft) => SchemaDraft): EditorState {
  return { ...state, draft: edit(state.draft), violations: [], banner: null, storeCleared: false };
}

export function select(state: EditorState, selection: Selection | null): EditorState {
  return { ...state, selection };
}

function afterOutcome(state: EditorState, outcome: SaveOutcome): EditorState {
  switch (outcome.kind) {
    case "saved":
      return {
        ...state,
        schemaId: outcome.id,
        violations: [],
        banner: null,
        storeCleared: outcome.storeCleared,
      };
    case "invalid":
      return { ...state, violations: outcome.violations, banner: null, storeCleared: false };
    case "unreachable":
      return { ...state, banner: `service unreachable: ${outcome.message}`, storeCleared: false };
  }
}

/** One save cycle: POST for a new schema, PUT after that. */
export async function save(state: EditorState, api: SchemaApi): Promise<EditorState> {
  const document = documentOf(state.draft);
  const outcome =
    state.schemaId === null
      ? await api.create(document)
      : await api.replace(state.schemaId, document);
  let next = afterOutcome(state, outcome);
  if (outcome.kind === "saved") {
    next = { ...next, sdlPreview: await api.fetchSdl(outcome.id) };
  }
  return next;
}
