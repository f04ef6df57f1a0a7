"""Schema model, JSON round-trip, and adjacency bookkeeping."""

import json

import pytest

from graphforge import (
    Datatype,
    GraphSchema,
    SchemaFormatError,
    adjacent_edges,
    parse_schema_json,
    serialize_schema_json,
)
from graphforge.datasets import movielens_schema, todo_schema, todo_schema_dict


def test_round_trip_is_identity():
    schema = todo_schema()
    again = parse_schema_json(serialize_schema_json(schema))
    assert again == schema
    assert serialize_schema_json(again) == serialize_schema_json(schema)


def test_round_trip_preserves_authored_order():
    schema = movielens_schema()
    data = json.loads(serialize_schema_json(schema))
    assert [v["label"] for v in data["vertices"]] == ["Genre", "Occupation", "User", "Movie"]
    assert [e["label"] for e in data["edges"]] == ["hasGenre", "rated", "worksAs"]
    assert list(data["vertices"][2]["properties"][0]) == ["key", "datatype", "required"]


def test_adjacency_lists_are_bidirectional():
    schema = todo_schema()
    user = schema.vertex_by_id["user"]
    todo = schema.vertex_by_id["todo"]
    assert [e.label for e in user.out_edges] == ["likes", "owns"]
    assert [e.label for e in user.in_edges] == ["likes"]
    assert [e.label for e in todo.in_edges] == ["owns"]
    assert todo.out_edges == []
    assert adjacent_edges(schema, user, "out") == user.out_edges
    assert adjacent_edges(schema, todo, "in") == todo.in_edges


def test_adjacent_edges_rejects_foreign_vertex():
    schema_a = todo_schema()
    schema_b = todo_schema()
    with pytest.raises(ValueError):
        adjacent_edges(schema_a, schema_b.vertex_by_id["user"], "out")
    with pytest.raises(ValueError):
        adjacent_edges(schema_a, schema_a.vertex_by_id["user"], "sideways")


def test_malformed_json_rejected():
    with pytest.raises(SchemaFormatError, match="invalid JSON"):
        parse_schema_json(b"{nope")


def test_unknown_key_rejected():
    data = todo_schema_dict()
    data["vertices"][0]["color"] = "red"
    with pytest.raises(SchemaFormatError, match="unknown key 'color'"):
        GraphSchema.from_dict(data)


def test_unknown_datatype_rejected():
    data = todo_schema_dict()
    data["vertices"][0]["properties"][0]["datatype"] = "Decimal"
    with pytest.raises(SchemaFormatError, match="unknown datatype 'Decimal'"):
        GraphSchema.from_dict(data)


def test_dangling_reference_rejected_when_strict():
    data = todo_schema_dict()
    data["edges"][1]["target"] = "ghost"
    with pytest.raises(SchemaFormatError, match="unknown target vertex 'ghost'"):
        GraphSchema.from_dict(data)
    lenient = GraphSchema.from_dict(data, strict=False)
    assert lenient.edge_by_id["owns"].target is None


def test_duplicate_ids_rejected():
    data = todo_schema_dict()
    data["vertices"].append(dict(data["vertices"][0]))
    with pytest.raises(SchemaFormatError, match="duplicate vertex id"):
        GraphSchema.from_dict(data)


def test_datatype_names():
    assert Datatype.from_name("Boolean") is Datatype.BOOLEAN
    assert {d.value for d in Datatype} == {"ID", "String", "Int", "Float", "Boolean"}


def test_empty_schema_is_representable():
    schema = GraphSchema.from_dict({"vertices": [], "edges": []})
    assert schema.vertices == [] and schema.edges == []
    assert parse_schema_json(serialize_schema_json(schema)) == schema
