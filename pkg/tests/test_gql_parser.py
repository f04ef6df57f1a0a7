"""GraphQL lexer and parser behavior."""

import pytest

from graphforge.gql import GraphQLSyntaxError, parse_document, parse_sdl
from graphforge.gql.ast import (
    EnumValue,
    Field,
    FloatValue,
    FragmentSpread,
    InlineFragment,
    IntValue,
    ListValue,
    NamedTypeNode,
    NonNullTypeNode,
    ObjectValue,
    StringValue,
    Variable,
)
from graphforge.datasets import todo_schema
from graphforge.synth import synthesize


def test_parse_simple_query():
    doc = parse_document('{ user(id: "1") { name age } }')
    (op,) = doc.operations()
    assert op.operation == "query" and op.name is None
    (root,) = op.selection_set.selections
    assert root.name == "user"
    assert root.arguments[0].name == "id"
    assert root.arguments[0].value == StringValue("1")
    assert [s.name for s in root.selection_set.selections] == ["name", "age"]


def test_parse_operation_with_variables():
    doc = parse_document("""
        query Fetch($min: Int! = 3, $names: [String!]) {
          userList(where: {age_GT: $min}) { name }
        }
    """)
    (op,) = doc.operations()
    assert op.name == "Fetch"
    first, second = op.variable_definitions
    assert first.name == "min" and first.type == NonNullTypeNode(NamedTypeNode("Int"))
    assert first.default == IntValue(3)
    assert second.name == "names"
    (root,) = op.selection_set.selections
    where = root.arguments[0].value
    assert isinstance(where, ObjectValue)
    assert where.fields[0].name == "age_GT"
    assert isinstance(where.fields[0].value, Variable)


def test_parse_values():
    doc = parse_document('{ f(a: 1, b: -2.5, c: "x\\n", d: true, e: null, g: DESC, h: [1, 2], i: {k: 1}) }')
    args = {a.name: a.value for a in doc.operations()[0].selection_set.selections[0].arguments}
    assert args["a"] == IntValue(1)
    assert args["b"] == FloatValue(-2.5)
    assert args["c"] == StringValue("x\n")
    assert args["d"].value is True
    assert args["g"] == EnumValue("DESC")
    assert args["h"] == ListValue((IntValue(1), IntValue(2)))
    assert isinstance(args["i"], ObjectValue)


def test_parse_fragments_and_aliases():
    doc = parse_document("""
        query { u: user(id: "1") { ...bits ... on UserVertex { age } } }
        fragment bits on UserVertex { name }
    """)
    (op,) = doc.operations()
    root = op.selection_set.selections[0]
    assert isinstance(root, Field) and root.alias == "u" and root.response_key == "u"
    spread, inline = root.selection_set.selections
    assert isinstance(spread, FragmentSpread) and spread.name == "bits"
    assert isinstance(inline, InlineFragment) and inline.type_condition == "UserVertex"
    assert doc.fragments()["bits"].type_condition == "UserVertex"


def test_block_string_dedent():
    doc = parse_document('{ f(s: """\n    hello\n      there\n    """) }')
    value = doc.operations()[0].selection_set.selections[0].arguments[0].value
    assert value == StringValue("hello\n  there")


def test_comments_and_commas_ignored():
    doc = parse_document('{ user(id: "1") { name, age } } # trailing')
    assert len(doc.operations()) == 1


@pytest.mark.parametrize("text,fragment", [
    ("{", "expected"),
    ("{ }", "selection set may not be empty"),
    ('{ user(id: "1" }', "expected"),
    ("{ f(a: 01) }", "leading zeros"),
    ("{ f(a: 1.) }", "invalid character"),
    ('{ f(a: "unterminated) }', "unterminated string"),
    ('{ f(a: "bad \\q") }', "invalid escape"),
    ("{ f(a: {k: 1, k: 2}) }", "duplicate key"),
    ("subscription { x }", "not supported"),
    ("query { x } type T { y: Int }", "not allowed in an executable document"),
    ("", "no definitions"),
])
def test_syntax_errors(text, fragment):
    with pytest.raises(GraphQLSyntaxError) as err:
        parse_document(text)
    assert fragment in str(err.value)


def test_syntax_error_location():
    with pytest.raises(GraphQLSyntaxError) as err:
        parse_document("{ user {\n  name(!\n} }")
    assert err.value.line == 2
    assert err.value.column == 8


def test_sdl_round_trip_of_synthesized_schema():
    doc = synthesize(todo_schema())
    parsed = parse_sdl(doc.sdl)
    names = {d.name for d in parsed.definitions}
    assert names == set(doc.types)
    by_name = parsed.by_name()
    user = by_name["UserVertex"]
    assert user.interfaces == ["GraphElement"]
    assert [f.name for f in user.fields] == doc.fields_map("UserVertex")
    likes_out = next(f for f in user.fields if f.name == "likesOut")
    assert [a.name for a in likes_out.arguments] == [
        "whereVertex", "orderByVertex", "whereEdge", "orderByEdge", "pagination",
    ]
    assert by_name["OrderDirection"].values == ["ASC", "DESC"]
    assert [f.name for f in by_name["PaginationInput"].fields] == ["offset", "limit"]


def test_sdl_rejects_executable_and_unsupported():
    with pytest.raises(GraphQLSyntaxError, match="executable definitions"):
        parse_sdl("query { x }")
    with pytest.raises(GraphQLSyntaxError, match="not supported"):
        parse_sdl("scalar Date")
