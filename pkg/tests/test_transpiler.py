"""Selection-tree compilation: step order, counters, and frozen outputs."""

from __future__ import annotations

import pytest

from graphforge.datasets import movielens_schema, todo_schema
from graphforge.ir import serialize
from graphforge.synth import synthesize
from graphforge.transpiler import ComplexityCounters, transpile_request

import queries


@pytest.fixture(scope="module")
def todo_doc():
    return synthesize(todo_schema())


@pytest.fixture(scope="module")
def ml_doc():
    return synthesize(movielens_schema())


def gremlin(doc, text, flavor="python", variables=None):
    return serialize(transpile_request(text, doc, variables).steps, flavor)


NESTED_QUERY = """
{
  userList(where: {age_GT: 18}) {
    age
    likesOut(pagination: {offset: 0, limit: 3}) {
      strength
      user { id }
    }
  }
}
"""

NESTED_PYTHON = (
    "g.V().has_label('User').has('age', P.gt(18)).project('age', 'likesOut')"
    ".by(__.coalesce(__.values('age'), __.constant(None)))"
    ".by(__.out_e('likes').project('strength', 'user').by(__.values('strength'))"
    ".by(__.in_v().has_label('User').project('id').by(__.id_()))"
    ".skip(0).limit(3).fold()).to_list()"
)

NESTED_GROOVY = (
    "g.V().hasLabel('User').has('age', gt(18)).project('age', 'likesOut')"
    ".by(coalesce(values('age'), constant(null)))"
    ".by(outE('likes').project('strength', 'user').by(values('strength'))"
    ".by(inV().hasLabel('User').project('id').by(id()))"
    ".skip(0).limit(3).fold()).toList()"
)


def test_nested_query_python_flavor(todo_doc):
    assert gremlin(todo_doc, NESTED_QUERY) == NESTED_PYTHON


def test_nested_query_groovy_flavor(todo_doc):
    assert gremlin(todo_doc, NESTED_QUERY, "groovy") == NESTED_GROOVY


def test_single_lookup(todo_doc):
    assert gremlin(todo_doc, '{ user(id: "42") { id } }') == (
        "g.V('42').has_label('User').project('id').by(__.id_()).next()"
    )


def test_label_and_required_property(todo_doc):
    assert gremlin(todo_doc, '{ todo(id: "5") { label checked } }') == (
        "g.V('5').has_label('Todo').project('label', 'checked')"
        ".by(__.label()).by(__.values('checked')).next()"
    )


def test_where_leaves_then_logicals(todo_doc):
    out = gremlin(todo_doc, """
    {
      userList(where: {OR: [{age_LT: 10}, {age_GT: 60, name_EQ: "Zed"}], name_NEQ: "Bo"}) { id }
    }
    """)
    assert out == (
        "g.V().has_label('User').has('name', P.neq('Bo'))"
        ".or_(__.has('age', P.lt(10)), __.has('age', P.gt(60)).has('name', P.eq('Zed')))"
        ".project('id').by(__.id_()).to_list()"
    )


def test_nested_and_block(todo_doc):
    out = gremlin(todo_doc, "{ userList(where: {AND: [{age_GTE: 1}, {age_LTE: 9}]}) { id } }")
    assert ".and_(__.has('age', P.gte(1)), __.has('age', P.lte(9)))" in out


def test_root_order_and_pagination_positions(todo_doc):
    out = gremlin(todo_doc, """
    {
      userList(
        where: {name_NEQ: "x"}
        orderBy: [{property: age, order: DESC}]
        pagination: {offset: 5, limit: 10}
      ) { id }
    }
    """)
    assert out == (
        "g.V().has_label('User').has('name', P.neq('x'))"
        ".order().by('age', Order.desc)"
        ".project('id').by(__.id_()).skip(5).limit(10).to_list()"
    )


def test_adjacency_filters_and_fused_ordering(todo_doc):
    out = gremlin(todo_doc, """
    {
      userList {
        likesOut(
          whereEdge: {strength_GT: 0.5}
          whereVertex: {age_GT: 5}
          orderByEdge: [{property: strength, order: DESC}]
          orderByVertex: [{property: age, order: ASC}]
          pagination: {offset: 2, limit: 4}
        ) { id }
      }
    }
    """)
    assert out == (
        "g.V().has_label('User').project('likesOut')"
        ".by(__.out_e('likes').has('strength', P.gt(0.5))"
        ".where(__.in_v().has_label('User').has('age', P.gt(5)))"
        ".order().by('strength', Order.desc).by(__.in_v().values('age'), Order.asc)"
        ".project('id').by(__.id_()).skip(2).limit(4).fold()).to_list()"
    )


def test_incoming_adjacency_uses_opposite_hops(todo_doc):
    out = gremlin(todo_doc, "{ userList { likesIn { user { id } } } }")
    assert ".in_e('likes')" in out
    assert ".by(__.out_v().has_label('User').project('id').by(__.id_()))" in out
    out = gremlin(todo_doc, "{ todoList { ownsIn(whereVertex: {age_GT: 1}) { id } } }")
    assert ".where(__.out_v().has_label('User').has('age', P.gt(1)))" in out


def test_mutation_templates(todo_doc):
    cases = {
        'mutation { addUserVertex(data: {name: "Ada", age: 30}) }':
            "g.add_v('User').property('name', 'Ada').property('age', 30).id_().next()",
        'mutation { updateUserVertex(id: "3", data: {name: "Ada", age: 50}) }':
            "g.V('3').has_label('User').property('name', 'Ada').property('age', 50).id_().next()",
        'mutation { connectUserToUserViaLikesEdge(source_user_id: "1", target_user_id: "2", data: {strength: 0.73}) }':
            "g.V('1').has_label('User').add_e('likes')"
            ".to(__.V('2').has_label('User')).property('strength', 0.73).id_().next()",
        'mutation { connectUserToTodoViaOwnsEdge(source_user_id: "1", target_todo_id: "4") }':
            "g.V('1').has_label('User').add_e('owns').to(__.V('4').has_label('Todo')).id_().next()",
        'mutation { updateUserToUserLikesEdge(id: "8", data: {strength: 0.1}) }':
            "g.E('8').has_label('likes').property('strength', 0.1).id_().next()",
        'mutation { deleteVertex(id: "9") }': "g.V('9').drop().iterate()",
        'mutation { deleteEdge(id: "8") }': "g.E('8').drop().iterate()",
    }
    for text, expected in cases.items():
        assert gremlin(todo_doc, text) == expected, text


def test_mutation_set_property_declaration_order(todo_doc):
    out = gremlin(todo_doc, 'mutation { addUserVertex(data: {age: 30, name: "Ada"}) }')
    assert out == "g.add_v('User').property('name', 'Ada').property('age', 30).id_().next()"


def test_connect_groovy_flavor(todo_doc):
    out = gremlin(
        todo_doc,
        'mutation { connectUserToUserViaLikesEdge(source_user_id: "1", target_user_id: "2", data: {strength: 0.73}) }',
        "groovy",
    )
    assert out == (
        "g.V('1').hasLabel('User').addE('likes')"
        ".to(V('2').hasLabel('User')).property('strength', 0.73).id().next()"
    )


@pytest.mark.parametrize("name", sorted(queries.EXPECTED_COUNTERS))
def test_workload_counters_and_single_visits(ml_doc, name):
    result = transpile_request(queries.WORKLOAD[name], ml_doc)
    s, w, k, d = queries.EXPECTED_COUNTERS[name]
    assert result.counters == ComplexityCounters(s, w, k, d, field_visits=s)


def test_field_visits_match_tree_size_when_aliased(todo_doc):
    result = transpile_request("""
    {
      userList {
        a: likesOut { strength user { id name } }
        b: likesOut { strength user { id name } }
      }
    }
    """, todo_doc)
    assert result.counters.s == 10
    assert result.counters.field_visits == 10
    assert result.counters.d == 1


def test_counters_for_mutations_are_empty(todo_doc):
    result = transpile_request('mutation { deleteVertex(id: "1") }', todo_doc)
    assert result.counters == ComplexityCounters(0, 0, 0, 0, 0)
