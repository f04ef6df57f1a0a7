/**
 * Manual diagram positions. Layout is presentation, not schema, so it
 * is persisted on the client only and keyed by vertex id.
 */

export interface Point {
  x: number;
  y: number;
}

export type Layout = Record<string, Point>;

/** Subset of the Storage interface so tests can pass a plain map. */
export interface KeyValueStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
}

const STORAGE_KEY = "graphforge-editor.layout";

export function loadLayout(store: KeyValueStore): Layout {
  const raw = store.getItem(STORAGE_KEY);
  if (raw === null) return {};
  try {
    return JSON.parse(raw) as Layout;
  } catch {
    return {};
  }
}

export function saveLayout(store: KeyValueStore, layout: Layout): void {
  store.setItem(STORAGE_KEY, JSON.stringify(layout));
}

export function moveVertex(layout: Layout, id: string, point: Point): Layout {
  return { ...layout, [id]: point };
}

/** First free slot on a coarse grid, for vertices without a position. */
export function placeNew(layout: Layout, id: string, index: number): Layout {
  if (layout[id] !== undefined) return layout;
  const column = index % 3;
  const row = Math.floor(index / 3);
  return { ...layout, [id]: { x: 60 + column * 240, y: 60 + row * 200 } };
}

export function positionOf(layout: Layout, id: string, index: number): Point {
  return layout[id] ?? { x: 60 + (index % 3) * 240, y: 60 + Math.floor(index / 3) * 200 };
}
