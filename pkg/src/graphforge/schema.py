"""Property graph schema model and its canonical JSON form.

A graph schema declares vertex and edge definitions with typed properties.
Every construction path funnels through ``GraphSchema.from_dict`` so the
bidirectional adjacency lists on vertices are always consistent with the
edge list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Datatype(Enum):
    """Scalar datatypes available for properties."""

    ID = "ID"
    STRING = "String"
    INT = "Int"
    FLOAT = "Float"
    BOOLEAN = "Boolean"

    @classmethod
    def from_name(cls, name: str) -> Datatype:
        for member in cls:
            if member.value == name:
                return member
        raise SchemaFormatError(f"unknown datatype {name!r}")


class SchemaFormatError(ValueError):
    """Schema JSON is malformed, has unknown keys, or references dangle."""


@dataclass(frozen=True)
class PropertyDef:
    key: str
    datatype: Datatype
    required: bool


@dataclass(eq=False)
class VertexDef:
    id: str
    label: str
    properties: list[PropertyDef]
    # filled in by GraphSchema; not part of structural identity
    out_edges: list[EdgeDef] = field(default_factory=list, repr=False)
    in_edges: list[EdgeDef] = field(default_factory=list, repr=False)

    def property_keys(self) -> list[str]:
        return [p.key for p in self.properties]


@dataclass(eq=False)
class EdgeDef:
    id: str
    label: str
    source: VertexDef | None
    target: VertexDef | None
    properties: list[PropertyDef]

    def property_keys(self) -> list[str]:
        return [p.key for p in self.properties]


def _require_keys(obj: dict, allowed: list[str], required: list[str], kind: str) -> None:
    for key in obj:
        if key not in allowed:
            raise SchemaFormatError(f"unknown key {key!r} in {kind}")
    for key in required:
        if key not in obj:
            raise SchemaFormatError(f"missing key {key!r} in {kind}")


def _parse_property(obj: Any, owner: str) -> PropertyDef:
    if not isinstance(obj, dict):
        raise SchemaFormatError(f"property of {owner} must be an object")
    _require_keys(obj, ["key", "datatype", "required"], ["key", "datatype", "required"], f"property of {owner}")
    key, datatype, required = obj["key"], obj["datatype"], obj["required"]
    if not isinstance(key, str):
        raise SchemaFormatError(f"property key of {owner} must be a string")
    if not isinstance(datatype, str):
        raise SchemaFormatError(f"datatype of {owner}.{key} must be a string")
    if not isinstance(required, bool):
        raise SchemaFormatError(f"required flag of {owner}.{key} must be a boolean")
    return PropertyDef(key=key, datatype=Datatype.from_name(datatype), required=required)


class GraphSchema:
    """An ordered collection of vertex and edge definitions."""

    def __init__(self, vertices: list[VertexDef], edges: list[EdgeDef]):
        self.vertices = vertices
        self.edges = edges
        self.vertex_by_id = {v.id: v for v in vertices}
        self.edge_by_id = {e.id: e for e in edges}

    @classmethod
    def from_dict(cls, data: Any, strict: bool = True) -> GraphSchema:
        """Build a schema from its JSON-shaped dict.

        With ``strict`` (the default) a dangling source/target reference is a
        SchemaFormatError. With ``strict=False`` the endpoint is left as None
        so the validator can report it instead of the parser.
        """
        if not isinstance(data, dict):
            raise SchemaFormatError("schema document must be an object")
        _require_keys(data, ["vertices", "edges"], ["vertices", "edges"], "schema document")
        if not isinstance(data["vertices"], list) or not isinstance(data["edges"], list):
            raise SchemaFormatError("vertices and edges must be lists")

        vertices: list[VertexDef] = []
        seen_vids: set[str] = set()
        for obj in data["vertices"]:
            if not isinstance(obj, dict):
                raise SchemaFormatError("vertex entry must be an object")
            _require_keys(obj, ["id", "label", "properties"], ["id", "label", "properties"], "vertex")
            vid, label = obj["id"], obj["label"]
            if not isinstance(vid, str) or not isinstance(label, str):
                raise SchemaFormatError("vertex id and label must be strings")
            if vid in seen_vids:
                raise SchemaFormatError(f"duplicate vertex id {vid!r}")
            seen_vids.add(vid)
            if not isinstance(obj["properties"], list):
                raise SchemaFormatError(f"properties of vertex {vid!r} must be a list")
            props = [_parse_property(p, f"vertex {vid!r}") for p in obj["properties"]]
            vertices.append(VertexDef(id=vid, label=label, properties=props))

        by_id = {v.id: v for v in vertices}
        edges: list[EdgeDef] = []
        seen_eids: set[str] = set()
        for obj in data["edges"]:
            if not isinstance(obj, dict):
                raise SchemaFormatError("edge entry must be an object")
            _require_keys(obj, ["id", "label", "source", "target", "properties"],
                          ["id", "label", "source", "target", "properties"], "edge")
            eid, label = obj["id"], obj["label"]
            if not isinstance(eid, str) or not isinstance(label, str):
                raise SchemaFormatError("edge id and label must be strings")
            if eid in seen_eids:
                raise SchemaFormatError(f"duplicate edge id {eid!r}")
            seen_eids.add(eid)
            endpoints: list[VertexDef | None] = []
            for side in ("source", "target"):
                ref = obj[side]
                if not isinstance(ref, str):
                    raise SchemaFormatError(f"{side} of edge {eid!r} must be a vertex id string")
                resolved = by_id.get(ref)
                if resolved is None and strict:
                    raise SchemaFormatError(f"edge {eid!r} references unknown {side} vertex {ref!r}")
                endpoints.append(resolved)
            if not isinstance(obj["properties"], list):
                raise SchemaFormatError(f"properties of edge {eid!r} must be a list")
            props = [_parse_property(p, f"edge {eid!r}") for p in obj["properties"]]
            edges.append(EdgeDef(id=eid, label=label, source=endpoints[0], target=endpoints[1], properties=props))

        for edge in edges:
            if edge.source is not None:
                edge.source.out_edges.append(edge)
            if edge.target is not None:
                edge.target.in_edges.append(edge)
        return cls(vertices, edges)

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {
                    "id": v.id,
                    "label": v.label,
                    "properties": [
                        {"key": p.key, "datatype": p.datatype.value, "required": p.required}
                        for p in v.properties
                    ],
                }
                for v in self.vertices
            ],
            "edges": [
                {
                    "id": e.id,
                    "label": e.label,
                    "source": e.source.id if e.source else None,
                    "target": e.target.id if e.target else None,
                    "properties": [
                        {"key": p.key, "datatype": p.datatype.value, "required": p.required}
                        for p in e.properties
                    ],
                }
                for e in self.edges
            ],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphSchema):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"GraphSchema(vertices={len(self.vertices)}, edges={len(self.edges)})"


def parse_schema_json(data: bytes | str) -> GraphSchema:
    """Parse schema JSON; malformed documents raise SchemaFormatError."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaFormatError(f"invalid JSON: {exc}") from exc
    return GraphSchema.from_dict(raw, strict=True)


def serialize_schema_json(schema: GraphSchema) -> bytes:
    """Deterministic canonical form: stable key order, authored list order."""
    return (json.dumps(schema.to_dict(), indent=2) + "\n").encode("utf-8")


def adjacent_edges(schema: GraphSchema, vertex: VertexDef, direction: str) -> list[EdgeDef]:
    """Edges incident to ``vertex`` in ``direction`` ("out" or "in")."""
    if schema.vertex_by_id.get(vertex.id) is not vertex:
        raise ValueError(f"vertex {vertex.id!r} does not belong to this schema")
    if direction == "out":
        return list(vertex.out_edges)
    if direction == "in":
        return list(vertex.in_edges)
    raise ValueError(f"direction must be 'out' or 'in', got {direction!r}")
