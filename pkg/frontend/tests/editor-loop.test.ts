import { afterAll, beforeAll, describe, expect, test } from "vitest";

import { SchemaApi } from "../src/api.js";
import { markersFor } from "../src/markers.js";
import { addProperty, documentOf, drawEdge, renameVertex } from "../src/model.js";
import { applyEdit, save } from "../src/state.js";
import { authorTodoDiagram, TODO_DOCUMENT, TODO_SDL_EXCERPTS } from "./helpers/author.js";
import { startService, type RunningService } from "./helpers/server.js";

describe("editor save loop", () => {
  let service: RunningService;
  let api: SchemaApi;

  beforeAll(async () => {
    service = await startService();
    api = new SchemaApi(service.baseUrl);
  });

  afterAll(async () => {
    await service.stop();
  });

  test("authoring the todo diagram yields zero markers and the expected sdl preview", async () => {
    let state = authorTodoDiagram();
    expect(documentOf(state.draft)).toEqual(TODO_DOCUMENT);

    state = await save(state, api);

    expect(state.schemaId).toMatch(/^[a-f0-9]{8}$/);
    expect(state.banner).toBeNull();
    expect(state.violations).toEqual([]);
    expect(markersFor(state.draft, state.violations).size).toBe(0);
    for (const excerpt of TODO_SDL_EXCERPTS) {
      expect(state.sdlPreview).toContain(excerpt);
    }
  });

  test("a double underscore label surfaces a V2 marker within one save cycle", async () => {
    let state = await save(authorTodoDiagram(), api);
    const savedSdl = state.sdlPreview;

    state = applyEdit(state, (d) => renameVertex(d, "user", "__User"));
    expect(state.violations).toEqual([]);

    state = await save(state, api);

    expect(state.violations).toHaveLength(1);
    expect(state.violations[0].rule).toBe("V2");
    expect(state.violations[0].subject).toBe("vertex[user]");
    const markers = markersFor(state.draft, state.violations);
    expect(markers.get("vertex:user")).toHaveLength(1);

    // the rejected draft never replaced the live schema
    expect(state.sdlPreview).toBe(savedSdl);
    const served = await api.fetchSdl(state.schemaId!);
    expect(served).toContain("type UserVertex implements GraphElement {");
    expect(served).not.toContain("__User");
  });

  test("a reserved property key is pinned to its row", async () => {
    let state = await save(authorTodoDiagram(), api);
    state = applyEdit(state, (d) => addProperty(d, "vertex", "user", "id", "ID", false));
    state = await save(state, api);

    expect(state.violations.map((v) => v.rule)).toEqual(["V4"]);
    const markers = markersFor(state.draft, state.violations);
    expect(markers.get("vertex:user/property:id")).toHaveLength(1);
  });

  test("a duplicate edge label between the same endpoints lands on the new edge", async () => {
    let state = await save(authorTodoDiagram(), api);
    state = applyEdit(state, (d) => drawEdge(d, "likes", "user", "user").draft);
    state = await save(state, api);

    expect(state.violations.map((v) => v.rule)).toEqual(["V9"]);
    const markers = markersFor(state.draft, state.violations);
    expect(markers.get("edge:likes2")).toHaveLength(1);
  });

  test("fixing the flagged label clears the markers on the next save", async () => {
    let state = await save(authorTodoDiagram(), api);
    state = applyEdit(state, (d) => renameVertex(d, "user", "__User"));
    state = await save(state, api);
    expect(state.violations).toHaveLength(1);

    state = applyEdit(state, (d) => renameVertex(d, "user", "Person"));
    expect(state.violations).toEqual([]);
    state = await save(state, api);

    expect(state.violations).toEqual([]);
    expect(state.storeCleared).toBe(true);
    expect(state.sdlPreview).toContain("type PersonVertex implements GraphElement {");
  });
});
