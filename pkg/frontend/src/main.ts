/**
 * Browser shell: owns one EditorState, re-renders on every transition,
 * and translates DOM events into edit actions and service calls.
 */

import { SchemaApi } from "./api.js";
import { renderDiagram } from "./diagram.js";
import { loadLayout, moveVertex, placeNew, saveLayout, type Layout } from "./layout.js";
import { markersFor } from "./markers.js";
import {
  addProperty,
  addVertex,
  DATATYPES,
  deleteEdge,
  deleteVertex,
  drawEdge,
  findEdge,
  findVertex,
  identifierHint,
  removeProperty,
  renameEdge,
  renameVertex,
  toggleRequired,
  type Datatype,
  type ElementKind,
} from "./model.js";
import { renderBanner, renderPlayground, renderSdl, renderViolations } from "./panels.js";
import { runPlayground } from "./playground.js";
import { applyEdit, initialState, save, select, type EditorState } from "./state.js";

const api = new SchemaApi(window.location.origin.replace(/:\d+$/, ":8000"));

let state: EditorState = initialState();
let layout: Layout = loadLayout(window.localStorage);
let pendingEdgeSource: string | null = null;

function mount(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing #${id}`);
  return el;
}

function render(): void {
  state.draft.vertices.forEach((v, i) => {
    layout = placeNew(layout, v.id, i);
  });
  saveLayout(window.localStorage, layout);
  const markers = markersFor(state.draft, state.violations);
  mount("banner").innerHTML = renderBanner(state);
  mount("diagram").innerHTML = renderDiagram(state.draft, layout, markers, state.selection);
  mount("violations").innerHTML = renderViolations(state.violations);
  mount("sdl").innerHTML = renderSdl(state);
  mount("playground").innerHTML = renderPlayground(state);
  mount("inspector").innerHTML = renderInspector();
  const runButton = document.getElementById("playground-run");
  if (runButton !== null) runButton.addEventListener("click", onRun);
  const queryBox = document.getElementById("playground-query");
  if (queryBox !== null) {
    queryBox.addEventListener("input", (event) => {
      state.playground.query = (event.target as HTMLTextAreaElement).value;
    });
  }
}

function renderInspector(): string {
  const sel = state.selection;
  if (sel === null) return `<p class="hint">select a vertex or edge</p>`;
  const kind: ElementKind = sel.kind === "property" ? sel.element : sel.kind;
  const element = kind === "vertex" ? findVertex(state.draft, sel.id) : findEdge(state.draft, sel.id);
  if (element === undefined) return "";
  const rows = element.properties
    .map(
      (p) =>
        `<li>${p.key}: ${p.datatype}${p.required ? "!" : ""} ` +
        `<button data-act="toggle" data-key="${p.key}">required</button> ` +
        `<button data-act="drop" data-key="${p.key}">remove</button></li>`,
    )
    .join("");
  return (
    `<h3>${kind} ${element.label}</h3>` +
    `<button data-act="rename">rename</button> ` +
    `<button data-act="delete">delete</button>` +
    `<ul>${rows}</ul>` +
    `<button data-act="add-prop">add property</button>`
  );
}

function promptIdentifier(title: string): string | null {
  const text = window.prompt(title);
  if (text === null || text === "") return null;
  const hint = identifierHint(text);
  if (hint !== null && !window.confirm(`${hint}; the service will reject it. Keep anyway?`)) {
    return null;
  }
  return text;
}

function onDiagramClick(event: Event): void {
  const target = event.target as Element;
  const vertexEl = target.closest("[data-vertex-id]");
  const edgeEl = target.closest("[data-edge-id]");
  if (vertexEl !== null) {
    const id = vertexEl.getAttribute("data-vertex-id")!;
    if (pendingEdgeSource !== null) {
      const label = promptIdentifier(`edge label ${pendingEdgeSource} -> ${id}`);
      const source = pendingEdgeSource;
      pendingEdgeSource = null;
      if (label !== null) {
        state = applyEdit(state, (draft) => drawEdge(draft, label, source, id).draft);
      }
    } else {
      state = select(state, { kind: "vertex", id });
    }
  } else if (edgeEl !== null) {
    state = select(state, { kind: "edge", id: edgeEl.getAttribute("data-edge-id")! });
  } else {
    state = select(state, null);
  }
  render();
}

function onInspectorClick(event: Event): void {
  const button = (event.target as Element).closest("button[data-act]");
  if (button === null || state.selection === null) return;
  const act = button.getAttribute("data-act")!;
  const key = button.getAttribute("data-key");
  const sel = state.selection;
  const kind: ElementKind = sel.kind === "property" ? sel.element : (sel.kind as ElementKind);
  const id = sel.id;
  if (act === "rename") {
    const label = promptIdentifier("new label");
    if (label !== null) {
      state = applyEdit(state, (draft) =>
        kind === "vertex" ? renameVertex(draft, id, label) : renameEdge(draft, id, label),
      );
    }
  } else if (act === "delete") {
    state = applyEdit(state, (draft) =>
      kind === "vertex" ? deleteVertex(draft, id) : deleteEdge(draft, id),
    );
    state = select(state, null);
  } else if (act === "add-prop") {
    const keyText = promptIdentifier("property key");
    if (keyText !== null) {
      const datatype = (window.prompt(`datatype (${DATATYPES.join(", ")})`, "String") ?? "String") as Datatype;
      const required = window.confirm("required?");
      state = applyEdit(state, (draft) => addProperty(draft, kind, id, keyText, datatype, required));
    }
  } else if (act === "toggle" && key !== null) {
    state = applyEdit(state, (draft) => toggleRequired(draft, kind, id, key));
  } else if (act === "drop" && key !== null) {
    state = applyEdit(state, (draft) => removeProperty(draft, kind, id, key));
  }
  render();
}

async function onSave(): Promise<void> {
  state = await save(state, api);
  render();
}

async function onRun(): Promise<void> {
  if (state.schemaId === null) return;
  state = { ...state, playground: await runPlayground(api, state.schemaId, state.playground.query) };
  render();
}

function onAddVertex(): void {
  const label = promptIdentifier("vertex label");
  if (label === null) return;
  state = applyEdit(state, (draft) => addVertex(draft, label).draft);
  render();
}

function onStartEdge(): void {
  if (state.selection === null || state.selection.kind !== "vertex") {
    window.alert("select the source vertex first");
    return;
  }
  pendingEdgeSource = state.selection.id;
}

export function start(): void {
  mount("add-vertex").addEventListener("click", onAddVertex);
  mount("draw-edge").addEventListener("click", onStartEdge);
  mount("save").addEventListener("click", () => {
    void onSave();
  });
  mount("diagram").addEventListener("click", onDiagramClick);
  mount("inspector").addEventListener("click", onInspectorClick);
  render();
}

start();
