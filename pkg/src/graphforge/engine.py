"""In-memory property graph store and traversal interpreter.

The store keeps integer ids from one monotonic counter shared by
vertices and edges, so a bare id is never ambiguous. The interpreter
walks compiled step sequences over a list of traversers, which is
enough to execute everything the compiler emits.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Any

from .frontend import expand, parse_request
from .ir import (
    AddE,
    AddV,
    AndStep,
    By,
    Coalesce,
    ConstantNull,
    Drop,
    Fold,
    Has,
    HasLabel,
    IdStep,
    InE,
    InV,
    LabelStep,
    Limit,
    OrderBy,
    OrderTerm,
    OrStep,
    OutE,
    OutV,
    Project,
    SetProperty,
    Skip,
    SourceE,
    SourceV,
    Step,
    TerminalIterate,
    TerminalList,
    TerminalNext,
    To,
    Values,
    Where,
)
from .synth import GraphQLSchemaDoc
from .transpiler import compile_tree


class NotFound(Exception):
    """A traversal that must produce a result produced none."""


@dataclass
class StoredVertex:
    id: int
    label: str
    properties: dict[str, Any] = field(default_factory=dict)


@dataclass
class StoredEdge:
    id: int
    label: str
    source_id: int
    target_id: int
    properties: dict[str, Any] = field(default_factory=dict)


class GraphStore:
    """Adjacency-indexed graph with cascade deletes."""

    def __init__(self) -> None:
        self.vertices: dict[int, StoredVertex] = {}
        self.edges: dict[int, StoredEdge] = {}
        self._out: dict[int, list[int]] = {}
        self._in: dict[int, list[int]] = {}
        self._next_id = 1
        self.lock = threading.RLock()

    def _allocate(self) -> int:
        allocated = self._next_id
        self._next_id += 1
        return allocated

    def add_vertex(self, label: str, properties: dict[str, Any] | None = None) -> StoredVertex:
        with self.lock:
            v = StoredVertex(self._allocate(), label, dict(properties or {}))
            self.vertices[v.id] = v
            self._out[v.id] = []
            self._in[v.id] = []
            return v

    def add_edge(self, label: str, source_id: int, target_id: int,
                 properties: dict[str, Any] | None = None) -> StoredEdge:
        with self.lock:
            if source_id not in self.vertices:
                raise NotFound(f"no vertex {source_id}")
            if target_id not in self.vertices:
                raise NotFound(f"no vertex {target_id}")
            e = StoredEdge(self._allocate(), label, source_id, target_id, dict(properties or {}))
            self.edges[e.id] = e
            self._out[source_id].append(e.id)
            self._in[target_id].append(e.id)
            return e

    def remove_vertex(self, vertex_id: int) -> None:
        with self.lock:
            if vertex_id not in self.vertices:
                raise NotFound(f"no vertex {vertex_id}")
            incident = list(self._out[vertex_id]) + list(self._in[vertex_id])
            for edge_id in incident:
                if edge_id in self.edges:
                    self.remove_edge(edge_id)
            del self.vertices[vertex_id]
            del self._out[vertex_id]
            del self._in[vertex_id]

    def remove_edge(self, edge_id: int) -> None:
        with self.lock:
            edge = self.edges.pop(edge_id, None)
            if edge is None:
                raise NotFound(f"no edge {edge_id}")
            self._out[edge.source_id].remove(edge_id)
            self._in[edge.target_id].remove(edge_id)

    def out_edges(self, vertex_id: int) -> list[StoredEdge]:
        return [self.edges[i] for i in self._out.get(vertex_id, ())]

    def in_edges(self, vertex_id: int) -> list[StoredEdge]:
        return [self.edges[i] for i in self._in.get(vertex_id, ())]

    def clear(self) -> None:
        with self.lock:
            self.vertices.clear()
            self.edges.clear()
            self._out.clear()
            self._in.clear()
            self._next_id = 1

    def to_dict(self) -> dict[str, Any]:
        with self.lock:
            return {
                "next_id": self._next_id,
                "vertices": [
                    {"id": v.id, "label": v.label, "properties": dict(v.properties)}
                    for v in self.vertices.values()
                ],
                "edges": [
                    {"id": e.id, "label": e.label, "source": e.source_id,
                     "target": e.target_id, "properties": dict(e.properties)}
                    for e in self.edges.values()
                ],
            }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "GraphStore":
        store = cls()
        for row in sorted(data.get("vertices", []), key=lambda r: r["id"]):
            v = StoredVertex(row["id"], row["label"], dict(row["properties"]))
            store.vertices[v.id] = v
            store._out[v.id] = []
            store._in[v.id] = []
        for row in sorted(data.get("edges", []), key=lambda r: r["id"]):
            e = StoredEdge(row["id"], row["label"], row["source"], row["target"], dict(row["properties"]))
            store.edges[e.id] = e
            store._out[e.source_id].append(e.id)
            store._in[e.target_id].append(e.id)
        top = max([v for v in store.vertices] + [e for e in store.edges], default=0)
        store._next_id = max(data.get("next_id", 1), top + 1)
        return store


# --- interpretation -----------------------------------------------------------

_MISSING = object()


def _parse_id(text: str | None) -> int | None:
    if text is None:
        return None
    try:
        return int(text)
    except ValueError:
        return None


def _predicate_holds(op: str, actual: Any, expected: Any) -> bool:
    if op == "eq":
        return actual == expected
    if op == "neq":
        return actual != expected
    if op == "gt":
        return actual > expected
    if op == "gte":
        return actual >= expected
    if op == "lt":
        return actual < expected
    if op == "lte":
        return actual <= expected
    raise ValueError(f"unknown predicate {op!r}")


class _Interpreter:
    def __init__(self, store: GraphStore):
        self.store = store

    def run(self, stream: list[Any], steps: list[Step]) -> list[Any]:
        i = 0
        while i < len(steps):
            step = steps[i]
            if isinstance(step, Project):
                bys = []
                while i + 1 < len(steps) and isinstance(steps[i + 1], By):
                    bys.append(steps[i + 1])
                    i += 1
                if len(bys) != len(step.keys):
                    raise ValueError("project keys and by modulators differ")
                stream = [
                    {key: self.by_value(el, by) for key, by in zip(step.keys, bys)}
                    for el in stream
                ]
            elif isinstance(step, AddE):
                if i + 1 >= len(steps) or not isinstance(steps[i + 1], To):
                    raise ValueError("add-edge step must be followed by a to step")
                targets = self.run([], list(steps[i + 1].inner))
                if stream and targets:
                    stream = [self.store.add_edge(step.label, stream[0].id, targets[0].id)]
                else:
                    stream = []
                i += 1
            else:
                stream = self.step(stream, step)
            i += 1
        return stream

    def by_value(self, element: Any, by: By) -> Any:
        produced = self.run([element], list(by.inner))
        return produced[0] if produced else None

    def step(self, stream: list[Any], step: Step) -> list[Any]:
        store = self.store
        if isinstance(step, SourceV):
            if step.id is None:
                return list(store.vertices.values())
            key = _parse_id(step.id)
            hit = store.vertices.get(key) if key is not None else None
            return [hit] if hit is not None else []
        if isinstance(step, SourceE):
            key = _parse_id(step.id)
            hit = store.edges.get(key) if key is not None else None
            return [hit] if hit is not None else []
        if isinstance(step, HasLabel):
            return [el for el in stream if el.label == step.label]
        if isinstance(step, Has):
            out = []
            for el in stream:
                actual = el.properties.get(step.key, _MISSING)
                if actual is not _MISSING and _predicate_holds(step.pred.op, actual, step.pred.value):
                    out.append(el)
            return out
        if isinstance(step, Where):
            return [el for el in stream if self.run([el], list(step.inner))]
        if isinstance(step, AndStep):
            return [el for el in stream
                    if all(self.run([el], list(branch)) for branch in step.branches)]
        if isinstance(step, OrStep):
            return [el for el in stream
                    if any(self.run([el], list(branch)) for branch in step.branches)]
        if isinstance(step, OrderBy):
            return self.ordered(stream, step.terms)
        if isinstance(step, Skip):
            return stream[step.count:]
        if isinstance(step, Limit):
            return stream[:step.count]
        if isinstance(step, Fold):
            return [stream]
        if isinstance(step, Values):
            out = []
            for el in stream:
                if step.key in el.properties:
                    out.append(el.properties[step.key])
            return out
        if isinstance(step, IdStep):
            return [str(el.id) for el in stream]
        if isinstance(step, LabelStep):
            return [el.label for el in stream]
        if isinstance(step, Coalesce):
            out = []
            for el in stream:
                for branch in step.branches:
                    produced = self.run([el], list(branch))
                    if produced:
                        out.extend(produced)
                        break
            return out
        if isinstance(step, ConstantNull):
            return [None for _ in stream]
        if isinstance(step, OutE):
            return [e for el in stream for e in store.out_edges(el.id) if e.label == step.label]
        if isinstance(step, InE):
            return [e for el in stream for e in store.in_edges(el.id) if e.label == step.label]
        if isinstance(step, InV):
            return [store.vertices[e.target_id] for e in stream]
        if isinstance(step, OutV):
            return [store.vertices[e.source_id] for e in stream]
        if isinstance(step, AddV):
            return [store.add_vertex(step.label)]
        if isinstance(step, AddE):
            raise ValueError("add-edge step must be followed by a to step")
        if isinstance(step, To):
            raise ValueError("stray to step")
        if isinstance(step, SetProperty):
            for el in stream:
                el.properties[step.key] = step.value
            return stream
        if isinstance(step, Drop):
            removed = []
            for el in stream:
                if isinstance(el, StoredVertex):
                    store.remove_vertex(el.id)
                else:
                    store.remove_edge(el.id)
                removed.append(str(el.id))
            return removed
        raise TypeError(f"cannot interpret {step!r}")

    def ordered(self, stream: list[Any], terms: tuple[OrderTerm, ...]) -> list[Any]:
        def extract(element: Any, term: OrderTerm) -> Any:
            if term.key is not None:
                return element.properties.get(term.key, _MISSING)
            produced = self.run([element], list(term.inner))
            return produced[0] if produced else _MISSING

        def compare(a: Any, b: Any) -> int:
            for term in terms:
                va, vb = extract(a, term), extract(b, term)
                if va is _MISSING and vb is _MISSING:
                    continue
                if va is _MISSING:
                    return 1
                if vb is _MISSING:
                    return -1
                if va == vb:
                    continue
                ascending = -1 if va < vb else 1
                return ascending if term.direction == "asc" else -ascending
            return -1 if a.id < b.id else (1 if a.id > b.id else 0)

        return sorted(stream, key=cmp_to_key(compare))


def execute(store: GraphStore, steps: list[Step] | tuple[Step, ...]) -> Any:
    """Run a compiled traversal against a store and yield its terminal value."""
    if not steps:
        raise ValueError("empty traversal")
    *body, last = steps
    if not isinstance(last, (TerminalList, TerminalNext, TerminalIterate)):
        raise ValueError("traversal lacks a terminal step")
    with store.lock:
        stream = _Interpreter(store).run([], list(body))
        if isinstance(last, TerminalList):
            return stream
        if not stream:
            raise NotFound("traversal produced no result")
        return stream[0]


def run_request(store: GraphStore, doc: GraphQLSchemaDoc, text: str,
                variables: dict[str, Any] | None = None,
                operation_name: str | None = None) -> dict[str, Any]:
    """Execute a GraphQL request against a store, returning the data payload."""
    tree = expand(parse_request(text), doc, variables, operation_name)
    compiled = compile_tree(tree)
    value = execute(store, compiled.steps)
    return {"data": {tree.root.key: value}}
