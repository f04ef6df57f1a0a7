/**
 * Attach server violations to the diagram elements they talk about.
 *
 * Violation subjects follow a small grammar: `vertex[<id>]` or
 * `edge[<id>]`, optionally suffixed `.property[<key>]`. Anything else
 * (for example a document-level formatting problem) stays unanchored
 * and only appears in the violations panel.
 */

import type { Violation } from "./api.js";
import type { ElementKind, SchemaDraft } from "./model.js";

export interface MarkerAnchor {
  kind: ElementKind;
  elementId: string;
  propertyKey: string | null;
}

const SUBJECT = /^(vertex|edge)\[([^\]]+)\](?:\.property\[([^\]]+)\])?$/;

export function anchorOf(violation: Violation): MarkerAnchor | null {
  const match = SUBJECT.exec(violation.subject);
  if (!match) return null;
  return {
    kind: match[1] as ElementKind,
    elementId: match[2],
    propertyKey: match[3] ?? null,
  };
}

export function anchorKey(anchor: MarkerAnchor): string {
  const base = `${anchor.kind}:${anchor.elementId}`;
  return anchor.propertyKey === null ? base : `${base}/property:${anchor.propertyKey}`;
}

/** Group violations by anchor key; unanchored ones land under "". */
export function markersFor(draft: SchemaDraft, violations: Violation[]): Map<string, Violation[]> {
  const markers = new Map<string, Violation[]>();
  const ids = {
    vertex: new Set(draft.vertices.map((v) => v.id)),
    edge: new Set(draft.edges.map((e) => e.id)),
  };
  for (const violation of violations) {
    const anchor = anchorOf(violation);
    const key = anchor !== null && ids[anchor.kind].has(anchor.elementId) ? anchorKey(anchor) : "";
    const bucket = markers.get(key);
    if (bucket === undefined) {
      markers.set(key, [violation]);
    } else {
      bucket.push(violation);
    }
  }
  return markers;
}

/** Markers shown on an element's box include its property markers. */
export function elementMarkers(
  markers: Map<string, Violation[]>,
  kind: ElementKind,
  elementId: string,
): Violation[] {
  const prefix = `${kind}:${elementId}`;
  const found: Violation[] = [];
  for (const [key, bucket] of markers) {
    if (key === prefix || key.startsWith(`${prefix}/`)) found.push(...bucket);
  }
  return found;
}
