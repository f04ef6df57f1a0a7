"""Naive reference resolver.

Answers requests straight from the selection tree with plain loops and
recursion, never touching the traversal IR or the interpreter. Kept
separate on purpose: the engine and this module should only ever agree
because they implement the same semantics, not because they share code.
"""

from __future__ import annotations

from typing import Any

from .engine import GraphStore, NotFound, StoredEdge, StoredVertex
from .frontend import (
    LogicAnd,
    LogicCondition,
    LogicLeaf,
    LogicOr,
    OrderSpec,
    SelectionNode,
    SelectionTree,
)


def _leaf_holds(leaf: LogicLeaf, properties: dict[str, Any]) -> bool:
    if leaf.property not in properties:
        return False
    actual = properties[leaf.property]
    wanted = leaf.value
    if leaf.op == "EQ":
        return actual == wanted
    if leaf.op == "NEQ":
        return actual != wanted
    if leaf.op == "GT":
        return actual > wanted
    if leaf.op == "GTE":
        return actual >= wanted
    if leaf.op == "LT":
        return actual < wanted
    if leaf.op == "LTE":
        return actual <= wanted
    raise ValueError(f"unknown operator {leaf.op}")


def _condition_holds(cond: LogicCondition | None, properties: dict[str, Any]) -> bool:
    if cond is None:
        return True
    if isinstance(cond, LogicLeaf):
        return _leaf_holds(cond, properties)
    if isinstance(cond, LogicAnd):
        return all(_condition_holds(c, properties) for c in cond.children)
    if isinstance(cond, LogicOr):
        return any(_condition_holds(c, properties) for c in cond.children)
    raise TypeError(f"unknown condition {cond!r}")


class _Descending:
    """Inverts comparisons so one ascending sort covers both directions."""

    __slots__ = ("value",)

    def __init__(self, value: Any):
        self.value = value

    def __lt__(self, other: "_Descending") -> bool:
        return other.value < self.value

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, _Descending) and other.value == self.value


def _order_pairs(pairs: list[tuple[StoredEdge | None, StoredVertex | None]],
                 terms: list[tuple[str, str, str]]) -> list[tuple[Any, Any]]:
    # term = (scope, property, direction); scope picks the element
    def key(pair: tuple[Any, Any]):
        e, v = pair
        parts = []
        for scope, prop, direction in terms:
            element = e if scope == "edge" else v
            if element is None or prop not in element.properties:
                parts.append((True, 0))
                continue
            value = element.properties[prop]
            parts.append((False, _Descending(value) if direction == "DESC" else value))
        anchor = e if e is not None else v
        parts.append((False, anchor.id))
        return tuple(parts)

    return sorted(pairs, key=key)


def _vertex_terms(spec: OrderSpec | None) -> list[tuple[str, str, str]]:
    if spec is None:
        return []
    return [("vertex", t.property, t.direction) for t in spec.terms]


def _edge_terms(spec: OrderSpec | None) -> list[tuple[str, str, str]]:
    if spec is None:
        return []
    return [("edge", t.property, t.direction) for t in spec.terms]


def _project_vertex(store: GraphStore, vertex: StoredVertex, node: SelectionNode) -> dict[str, Any]:
    row: dict[str, Any] = {}
    for child in node.children:
        kind = child.origin.kind
        if kind == "id":
            row[child.key] = str(vertex.id)
        elif kind == "label":
            row[child.key] = vertex.label
        elif kind == "property":
            row[child.key] = vertex.properties.get(child.origin.prop.key)
        elif kind == "adjacency":
            row[child.key] = _resolve_adjacency(store, vertex, child)
        else:
            raise ValueError(f"unexpected field kind {kind}")
    return row


def _resolve_adjacency(store: GraphStore, vertex: StoredVertex, node: SelectionNode) -> list[dict[str, Any]]:
    origin = node.origin
    outgoing = origin.direction == "out"
    edges = store.out_edges(vertex.id) if outgoing else store.in_edges(vertex.id)
    pairs = []
    for edge in edges:
        if edge.label != origin.edge.label:
            continue
        far = store.vertices[edge.target_id if outgoing else edge.source_id]
        if far.label != origin.far.label:
            continue
        if not _condition_holds(node.where_edge, edge.properties):
            continue
        if not _condition_holds(node.where_vertex, far.properties):
            continue
        pairs.append((edge, far))
    terms = _edge_terms(node.order_by_edge) + _vertex_terms(node.order_by_vertex)
    if terms:
        pairs = _order_pairs(pairs, terms)
    rows = [_project_edge(store, edge, far, node) for edge, far in pairs]
    if node.pagination is not None:
        rows = rows[node.pagination.offset:][:node.pagination.limit]
    return rows


def _project_edge(store: GraphStore, edge: StoredEdge, far: StoredVertex,
                  node: SelectionNode) -> dict[str, Any]:
    row: dict[str, Any] = {}
    for child in node.children:
        kind = child.origin.kind
        if kind == "id":
            row[child.key] = str(edge.id)
        elif kind == "label":
            row[child.key] = edge.label
        elif kind == "property":
            row[child.key] = edge.properties.get(child.origin.prop.key)
        elif kind == "vertex_ref":
            row[child.key] = _project_vertex(store, far, child)
        else:
            raise ValueError(f"unexpected field kind {kind}")
    return row


def _find_vertex(store: GraphStore, raw_id: str | None, label: str) -> StoredVertex | None:
    try:
        vid = int(raw_id)
    except (TypeError, ValueError):
        return None
    vertex = store.vertices.get(vid)
    if vertex is None or vertex.label != label:
        return None
    return vertex


def naive_resolve(store: GraphStore, tree: SelectionTree) -> Any:
    """Answer a query tree directly; mutations go through naive_apply."""
    if tree.operation == "mutation":
        return naive_apply(store, tree)
    root = tree.root
    origin = root.origin
    if origin.kind == "root_single":
        vertex = _find_vertex(store, root.id_arg, origin.vertex.label)
        if vertex is None:
            raise NotFound("no such vertex")
        return _project_vertex(store, vertex, root)

    chosen = [v for v in store.vertices.values() if v.label == origin.vertex.label]
    chosen = [v for v in chosen if _condition_holds(root.where, v.properties)]
    terms = _vertex_terms(root.order_by)
    if terms:
        ordered = _order_pairs([(None, v) for v in chosen], terms)
        chosen = [v for _, v in ordered]
    rows = [_project_vertex(store, v, root) for v in chosen]
    if root.pagination is not None:
        rows = rows[root.pagination.offset:][:root.pagination.limit]
    return rows


def naive_apply(store: GraphStore, tree: SelectionTree) -> str:
    """Apply a mutation tree through the plain store interface."""
    root = tree.root
    origin = root.origin
    kind = origin.kind
    if kind == "add_vertex":
        vertex = store.add_vertex(origin.vertex.label, dict(root.data or {}))
        return str(vertex.id)
    if kind == "update_vertex":
        vertex = _find_vertex(store, root.id_arg, origin.vertex.label)
        if vertex is None:
            raise NotFound("no such vertex")
        vertex.properties.update(root.data or {})
        return str(vertex.id)
    if kind == "connect_edge":
        edge_def = origin.edge
        source = _find_vertex(store, root.source_id, edge_def.source.label)
        target = _find_vertex(store, root.target_id, edge_def.target.label)
        if source is None or target is None:
            raise NotFound("missing endpoint")
        edge = store.add_edge(edge_def.label, source.id, target.id, dict(root.data or {}))
        return str(edge.id)
    if kind == "update_edge":
        try:
            eid = int(root.id_arg)
        except (TypeError, ValueError):
            raise NotFound("no such edge")
        edge = store.edges.get(eid)
        if edge is None or edge.label != origin.edge.label:
            raise NotFound("no such edge")
        edge.properties.update(root.data or {})
        return str(edge.id)
    if kind == "delete_vertex":
        try:
            vid = int(root.id_arg)
        except (TypeError, ValueError):
            raise NotFound("no such vertex")
        if vid not in store.vertices:
            raise NotFound("no such vertex")
        store.remove_vertex(vid)
        return str(vid)
    if kind == "delete_edge":
        try:
            eid = int(root.id_arg)
        except (TypeError, ValueError):
            raise NotFound("no such edge")
        if eid not in store.edges:
            raise NotFound("no such edge")
        store.remove_edge(eid)
        return str(eid)
    raise ValueError(f"unexpected mutation kind {kind}")
