/**
 * Side panel rendering: violations, SDL preview, playground panes.
 * String-producing like the diagram, mounted by the shell.
 */

import type { Violation } from "./api.js";
import { escapeXml } from "./diagram.js";
import type { EditorState } from "./state.js";

export function renderBanner(state: EditorState): string {
  if (state.banner === null) return "";
  return `<div class="banner" role="alert">${escapeXml(state.banner)}</div>`;
}

export function renderViolations(violations: Violation[]): string {
  if (violations.length === 0) {
    return `<p class="ok">no violations</p>`;
  }
  const items = violations
    .map(
      (v) =>
        `<li><span class="rule">${escapeXml(v.rule)}</span> ` +
        `<span class="subject">${escapeXml(v.subject)}</span>: ${escapeXml(v.message)}</li>`,
    )
    .join("");
  return `<ul class="violations">${items}</ul>`;
}

export function renderSdl(state: EditorState): string {
  if (state.sdlPreview === "") {
    return `<p class="hint">save the schema to see its generated GraphQL SDL</p>`;
  }
  return `<pre class="sdl">${escapeXml(state.sdlPreview)}</pre>`;
}

export function renderPlayground(state: EditorState): string {
  const note = state.storeCleared
    ? `<p class="hint">schema replaced; the store was cleared</p>`
    : "";
  return (
    note +
    `<textarea id="playground-query" spellcheck="false" rows="10">${escapeXml(state.playground.query)}</textarea>` +
    `<button id="playground-run"${state.schemaId === null ? " disabled" : ""}>Run</button>` +
    `<h3>Response</h3><pre class="response">${escapeXml(state.playground.response)}</pre>` +
    `<h3>Gremlin</h3><pre class="gremlin">${escapeXml(state.playground.gremlin)}</pre>`
  );
}
