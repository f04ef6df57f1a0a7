import { describe, expect, test } from "vitest";

import { boxHeight, renderDiagram } from "../src/diagram.js";
import { markersFor } from "../src/markers.js";
import { addProperty, addVertex, drawEdge, emptyDraft } from "../src/model.js";

function todoDraft() {
  let { draft, id: user } = addVertex(emptyDraft(), "User");
  draft = addProperty(draft, "vertex", user, "name", "String", true);
  draft = addProperty(draft, "vertex", user, "age", "Int", false);
  const todo = addVertex(draft, "Todo");
  draft = todo.draft;
  draft = drawEdge(draft, "likes", user, user).draft;
  draft = addProperty(draft, "edge", "likes", "strength", "Float", true);
  draft = drawEdge(draft, "owns", user, todo.id).draft;
  return draft;
}

describe("diagram rendering", () => {
  test("one box per vertex with its property rows", () => {
    const svg = renderDiagram(todoDraft(), {}, new Map(), null);
    expect(svg.match(/class="vertex"/g)).toHaveLength(2);
    expect(svg).toContain("name: String!");
    expect(svg).toContain("age: Int<");
    expect(svg).toContain(">User</text>");
  });

  test("a self edge renders as a loop, others as lines", () => {
    const svg = renderDiagram(todoDraft(), {}, new Map(), null);
    const paths = svg.match(/<path d="[^"]*"/g)!.filter((p) => !p.includes("M 0 0"));
    expect(paths.some((p) => p.includes("C "))).toBe(true);
    expect(paths.some((p) => p.startsWith('<path d="M') && p.includes(" L "))).toBe(true);
    expect(svg).toContain(">likes (1)</text>");
    expect(svg).toContain(">owns</text>");
  });

  test("anchored violations surface as badges on their element", () => {
    const draft = todoDraft();
    const markers = markersFor(draft, [
      { rule: "V2", subject: "vertex[user]", message: "label must not start with __" },
    ]);
    const svg = renderDiagram(draft, {}, markers, null);
    expect(svg).toContain('class="marker"');
    expect(svg).toContain(">V2</text>");
    expect(svg).toContain("label must not start with __");
  });

  test("selection changes the stroke of the selected element only", () => {
    const svg = renderDiagram(todoDraft(), {}, new Map(), { kind: "vertex", id: "user" });
    expect(svg).toContain('stroke="#1565c0"');
    const unselected = renderDiagram(todoDraft(), {}, new Map(), null);
    expect(unselected).not.toContain('stroke="#1565c0"');
  });

  test("labels are escaped in the markup", () => {
    const { draft } = addVertex(emptyDraft(), "A<B>&\"C");
    const svg = renderDiagram(draft, {}, new Map(), null);
    expect(svg).toContain("A&lt;B&gt;&amp;&quot;C");
    expect(svg).not.toContain("A<B>");
  });

  test("box height grows with the property count", () => {
    const bare = addVertex(emptyDraft(), "User");
    const tall = addProperty(bare.draft, "vertex", "user", "name", "String", true);
    expect(boxHeight(tall.vertices[0])).toBeGreaterThan(boxHeight(bare.draft.vertices[0]));
  });
});
