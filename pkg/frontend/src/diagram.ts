/**
 * Diagram rendering: the draft as an SVG node-link picture.
 *
 * Rendering is a pure string function of draft, layout, markers, and
 * selection, which keeps it testable without a browser; the shell
 * mounts the string and wires events through data attributes.
 */

import type { Violation } from "./api.js";
import { elementMarkers } from "./markers.js";
import type { EdgeDraft, SchemaDraft, VertexDraft } from "./model.js";
import type { Layout, Point } from "./layout.js";
import { positionOf } from "./layout.js";
import type { Selection } from "./state.js";

export const BOX_WIDTH = 180;
const HEADER_HEIGHT = 30;
const ROW_HEIGHT = 18;
const PADDING = 6;

export function boxHeight(vertex: VertexDraft): number {
  return HEADER_HEIGHT + vertex.properties.length * ROW_HEIGHT + PADDING;
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function propertyRow(p: { key: string; datatype: string; required: boolean }): string {
  return `${p.key}: ${p.datatype}${p.required ? "!" : ""}`;
}

function isSelected(selection: Selection | null, kind: "vertex" | "edge", id: string): boolean {
  return selection !== null && selection.kind === kind && selection.id === id;
}

function badge(x: number, y: number, violations: Violation[]): string {
  if (violations.length === 0) return "";
  const label = violations.length === 1 ? violations[0].rule : `${violations.length}`;
  const titles = violations.map((v) => `${v.rule}: ${v.message}`).join("\n");
  return (
    `<g class="marker"><title>${escapeXml(titles)}</title>` +
    `<circle cx="${x}" cy="${y}" r="11" fill="#c62828"></circle>` +
    `<text x="${x}" y="${y + 4}" text-anchor="middle" fill="#fff" font-size="10">${escapeXml(label)}</text></g>`
  );
}

function vertexBox(
  vertex: VertexDraft,
  at: Point,
  violations: Violation[],
  selected: boolean,
): string {
  const height = boxHeight(vertex);
  const stroke = violations.length > 0 ? "#c62828" : selected ? "#1565c0" : "#444";
  const rows = vertex.properties
    .map((p, i) => {
      const y = at.y + HEADER_HEIGHT + (i + 1) * ROW_HEIGHT - 5;
      return (
        `<text class="prop" data-vertex-id="${escapeXml(vertex.id)}" data-prop-key="${escapeXml(p.key)}"` +
        ` x="${at.x + 10}" y="${y}" font-size="12">${escapeXml(propertyRow(p))}</text>`
      );
    })
    .join("");
  return (
    `<g class="vertex" data-vertex-id="${escapeXml(vertex.id)}">` +
    `<rect x="${at.x}" y="${at.y}" width="${BOX_WIDTH}" height="${height}" rx="6"` +
    ` fill="#fff" stroke="${stroke}" stroke-width="${selected || violations.length > 0 ? 2.5 : 1.5}"></rect>` +
    `<line x1="${at.x}" y1="${at.y + HEADER_HEIGHT - 4}" x2="${at.x + BOX_WIDTH}" y2="${at.y + HEADER_HEIGHT - 4}" stroke="#bbb"></line>` +
    `<text x="${at.x + BOX_WIDTH / 2}" y="${at.y + 19}" text-anchor="middle" font-size="14" font-weight="bold">` +
    `${escapeXml(vertex.label)}</text>` +
    rows +
    badge(at.x + BOX_WIDTH - 4, at.y + 4, violations) +
    `</g>`
  );
}

function center(at: Point, vertex: VertexDraft): Point {
  return { x: at.x + BOX_WIDTH / 2, y: at.y + boxHeight(vertex) / 2 };
}

/** Point where the center-to-center line leaves a box border. */
function borderPoint(from: Point, toward: Point, vertex: VertexDraft): Point {
  const dx = toward.x - from.x;
  const dy = toward.y - from.y;
  if (dx === 0 && dy === 0) return from;
  const scaleX = dx !== 0 ? Math.abs(BOX_WIDTH / 2 / dx) : Infinity;
  const scaleY = dy !== 0 ? Math.abs(boxHeight(vertex) / 2 / dy) : Infinity;
  const scale = Math.min(scaleX, scaleY);
  return { x: from.x + dx * scale, y: from.y + dy * scale };
}

function edgeShape(
  edge: EdgeDraft,
  sourceAt: Point,
  targetAt: Point,
  source: VertexDraft,
  target: VertexDraft,
): { path: string; labelAt: Point } {
  if (edge.source === edge.target) {
    const right = sourceAt.x + BOX_WIDTH;
    const y = sourceAt.y + boxHeight(source) / 2;
    const path =
      `M ${right} ${y - 12} C ${right + 70} ${y - 40}, ${right + 70} ${y + 40}, ${right} ${y + 12}`;
    return { path, labelAt: { x: right + 58, y } };
  }
  const a = center(sourceAt, source);
  const b = center(targetAt, target);
  const start = borderPoint(a, b, source);
  const end = borderPoint(b, a, target);
  return {
    path: `M ${start.x} ${start.y} L ${end.x} ${end.y}`,
    labelAt: { x: (start.x + end.x) / 2, y: (start.y + end.y) / 2 - 6 },
  };
}

function edgeLine(
  edge: EdgeDraft,
  draft: SchemaDraft,
  layout: Layout,
  violations: Violation[],
  selected: boolean,
): string {
  const sourceIndex = draft.vertices.findIndex((v) => v.id === edge.source);
  const targetIndex = draft.vertices.findIndex((v) => v.id === edge.target);
  if (sourceIndex < 0 || targetIndex < 0) return "";
  const source = draft.vertices[sourceIndex];
  const target = draft.vertices[targetIndex];
  const { path, labelAt } = edgeShape(
    edge,
    positionOf(layout, source.id, sourceIndex),
    positionOf(layout, target.id, targetIndex),
    source,
    target,
  );
  const stroke = violations.length > 0 ? "#c62828" : selected ? "#1565c0" : "#666";
  const suffix = edge.properties.length > 0 ? ` (${edge.properties.length})` : "";
  return (
    `<g class="edge" data-edge-id="${escapeXml(edge.id)}">` +
    `<path d="${path}" fill="none" stroke="${stroke}" stroke-width="${selected ? 2.5 : 1.5}"` +
    ` marker-end="url(#arrow)"></path>` +
    `<text x="${labelAt.x}" y="${labelAt.y}" text-anchor="middle" font-size="12" fill="${stroke}">` +
    `${escapeXml(edge.label + suffix)}</text>` +
    badge(labelAt.x, labelAt.y - 22, violations) +
    `</g>`
  );
}

export function renderDiagram(
  draft: SchemaDraft,
  layout: Layout,
  markers: Map<string, Violation[]>,
  selection: Selection | null,
): string {
  let width = 720;
  let height = 480;
  draft.vertices.forEach((vertex, index) => {
    const at = positionOf(layout, vertex.id, index);
    width = Math.max(width, at.x + BOX_WIDTH + 120);
    height = Math.max(height, at.y + boxHeight(vertex) + 80);
  });
  const edges = draft.edges
    .map((edge) =>
      edgeLine(edge, draft, layout, elementMarkers(markers, "edge", edge.id), isSelected(selection, "edge", edge.id)),
    )
    .join("");
  const vertices = draft.vertices
    .map((vertex, index) =>
      vertexBox(
        vertex,
        positionOf(layout, vertex.id, index),
        elementMarkers(markers, "vertex", vertex.id),
        isSelected(selection, "vertex", vertex.id),
      ),
    )
    .join("");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}"` +
    ` viewBox="0 0 ${width} ${height}" font-family="system-ui, sans-serif">` +
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7"` +
    ` orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="#666"></path></marker></defs>` +
    edges +
    vertices +
    `</svg>`
  );
}
