"""Validator rule matrix: each fixture violates exactly one rule."""

from graphforge import GraphSchema, validate
from graphforge.datasets import movielens_schema, todo_schema, todo_schema_dict
from graphforge.schema import EdgeDef, VertexDef


def vertex(vid, label, props=()):
    return {
        "id": vid,
        "label": label,
        "properties": [{"key": k, "datatype": dt, "required": req} for k, dt, req in props],
    }


def edge(eid, label, source, target, props=()):
    return {
        "id": eid,
        "label": label,
        "source": source,
        "target": target,
        "properties": [{"key": k, "datatype": dt, "required": req} for k, dt, req in props],
    }


def build(vertices, edges=(), strict=True):
    return GraphSchema.from_dict({"vertices": list(vertices), "edges": list(edges)}, strict=strict)


def rules_of(schema):
    return [v.rule for v in validate(schema)]


def _v7_schema():
    # Dangling endpoints cannot come out of the JSON parser; build directly.
    user = VertexDef(id="user", label="User", properties=[])
    broken = EdgeDef(id="owns", label="owns", source=user, target=None, properties=[])
    user.out_edges.append(broken)
    return GraphSchema([user], [broken])


RULE_FIXTURES = {
    "V1": lambda: build([vertex("v1", "9User")]),
    "V2": lambda: build([vertex("v1", "__User")]),
    "V3": lambda: build([vertex("v1", "User", [("0wned", "Int", True)])]),
    "V4": lambda: build([vertex("v1", "User", [("label", "String", True)])]),
    "V5": lambda: build([vertex("v1", "User", [("age", "Int", True), ("age", "Int", False)])]),
    "V6": lambda: build([vertex("v1", "User"), vertex("v2", "User")]),
    "V7": _v7_schema,
    "V8": lambda: build(
        [vertex("v1", "User"), vertex("v2", "Todo")],
        [edge("e1", "owns", "v1", "v2", [("user", "String", True)])],
    ),
    "V9": lambda: build(
        [vertex("v1", "User")],
        [edge("e1", "likes", "v1", "v1"), edge("e2", "likes", "v1", "v1")],
    ),
    "V10": lambda: build(
        [vertex("v1", "User"), vertex("v2", "Todo", [("ownsIn", "Int", True)])],
        [edge("e1", "owns", "v1", "v2")],
    ),
    "V11": lambda: build(
        [vertex("v1", "User", [("ownsOut", "Int", True)]), vertex("v2", "Todo")],
        [edge("e1", "owns", "v1", "v2")],
    ),
    "V12": lambda: build([vertex("v1", "Mutation")]),
}


def test_each_fixture_triggers_exactly_its_rule():
    for rule, make in RULE_FIXTURES.items():
        found = rules_of(make())
        assert found == [rule], f"fixture for {rule} produced {found}"


def test_clean_schemas_have_no_violations():
    assert validate(todo_schema()) == []
    assert validate(movielens_schema()) == []
    assert validate(build([])) == []


def test_all_violations_reported_not_just_first():
    schema = build([
        vertex("v1", "__bad!", [("id", "String", True), ("id", "String", True)]),
        vertex("v2", "__bad!"),
    ])
    rules = rules_of(schema)
    assert rules == ["V1", "V2", "V4", "V4", "V5", "V1", "V2", "V6"]


def test_validate_is_pure_and_deterministic():
    schema = build([vertex("v1", "User"), vertex("v2", "User")])
    first = validate(schema)
    assert validate(schema) == first


def test_violation_subjects_name_schema_elements():
    schema = build(
        [vertex("v1", "User"), vertex("v2", "Todo", [("ownsIn", "Int", True)])],
        [edge("e1", "owns", "v1", "v2")],
    )
    (violation,) = validate(schema)
    assert violation.subject == "edge[e1]"
    assert "ownsIn" in violation.message


def test_v8_covers_both_endpoints():
    schema = build(
        [vertex("v1", "User"), vertex("v2", "Todo")],
        [edge("e1", "owns", "v1", "v2", [("todo", "String", False)])],
    )
    (violation,) = validate(schema)
    assert violation.rule == "V8" and "'Todo'" in violation.message


def test_v9_requires_same_direction():
    # same label reused between different vertex pairs in compatible positions
    ok = build(
        [vertex("v1", "A"), vertex("v2", "B"), vertex("v3", "C")],
        [edge("e1", "knows", "v1", "v2"), edge("e2", "knows", "v3", "v1")],
    )
    assert validate(ok) == []
    bad = build(
        [vertex("v1", "A"), vertex("v2", "B"), vertex("v3", "C")],
        [edge("e1", "knows", "v1", "v2"), edge("e2", "knows", "v1", "v3")],
    )
    assert rules_of(bad) == ["V9"]


def test_reserved_labels_rejected_for_vertices_and_edges():
    for label in ("Query", "Mutation", "GraphElement", "PaginationInput", "OrderDirection"):
        assert rules_of(build([vertex("v1", label)])) == ["V12"]
    schema = build([vertex("v1", "A"), vertex("v2", "B")], [edge("e1", "Query", "v1", "v2")])
    assert rules_of(schema) == ["V12"]


def test_name_collision_sweep():
    # lcfirst twins collide on both Query root fields (user and userList)
    assert rules_of(build([vertex("v1", "User"), vertex("v2", "user")])) == ["V12", "V12"]
    # single lookup root of one vertex equals the list root of another
    assert rules_of(build([vertex("v1", "User"), vertex("v2", "UserList")])) == ["V12"]
    # vertex label lcfirsts to the default id field on incident edge types
    schema = build([vertex("v1", "Id"), vertex("v2", "B")], [edge("e1", "refs", "v2", "v1")])
    assert rules_of(schema) == ["V12"]
    # an Id vertex with no incident edges synthesizes nothing that collides
    assert validate(build([vertex("v1", "Id")])) == []
    # edge labels that differ only in first-letter case collide on the field
    schema = build(
        [vertex("v1", "A"), vertex("v2", "B"), vertex("v3", "C")],
        [edge("e1", "knows", "v1", "v2"), edge("e2", "Knows", "v1", "v3")],
    )
    assert rules_of(schema) == ["V12"]


def test_collision_sweep_waits_for_clean_rules():
    # the V9 fixture would also collide on synthesized names; only V9 reports
    schema = build(
        [vertex("v1", "User")],
        [edge("e1", "likes", "v1", "v1"), edge("e2", "likes", "v1", "v1")],
    )
    assert rules_of(schema) == ["V9"]
