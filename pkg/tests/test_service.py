"""REST endpoints: registry lifecycle, transpilation, execution, persistence."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from graphforge.datasets import todo_schema_dict
from graphforge.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


@pytest.fixture()
def schema_id(client):
    response = client.post("/schemas", json=todo_schema_dict())
    assert response.status_code == 201
    return response.json()["id"]


def test_create_list_read_delete(client, schema_id):
    assert len(schema_id) == 8

    listing = client.get("/schemas").json()["schemas"]
    assert listing == [{"id": schema_id, "vertices": 2, "edges": 2}]

    body = client.get(f"/schemas/{schema_id}").json()
    assert [v["label"] for v in body["vertices"]] == ["User", "Todo"]
    assert [e["label"] for e in body["edges"]] == ["likes", "owns"]

    assert client.delete(f"/schemas/{schema_id}").status_code == 204
    assert client.get("/schemas").json()["schemas"] == []
    assert client.delete(f"/schemas/{schema_id}").status_code == 404


def test_invalid_schema_reports_violations(client):
    broken = todo_schema_dict()
    broken["vertices"][0]["properties"].append(
        {"key": "name", "datatype": "Int", "required": False})  # duplicate key
    broken["vertices"][1]["label"] = "User"  # label already taken
    response = client.post("/schemas", json=broken)
    assert response.status_code == 422
    violations = response.json()["violations"]
    assert {v["rule"] for v in violations} >= {"V5", "V6"}
    for v in violations:
        assert set(v) == {"rule", "subject", "message"}


def test_malformed_document_uses_format_rule(client):
    response = client.post("/schemas", json={"vertices": "nope"})
    assert response.status_code == 422
    assert response.json()["violations"][0]["rule"] == "FORMAT"

    response = client.post("/schemas", json=[1, 2])
    assert response.status_code == 422
    assert response.json()["violations"][0]["rule"] == "FORMAT"


def test_unknown_schema_id_is_404_everywhere(client):
    assert client.get("/schemas/deadbeef").status_code == 404
    assert client.put("/schemas/deadbeef", json=todo_schema_dict()).status_code == 404
    assert client.delete("/schemas/deadbeef").status_code == 404
    assert client.get("/schemas/deadbeef/sdl").status_code == 404
    assert client.post("/schemas/deadbeef/transpile", json={"query": "{ x }"}).status_code == 404
    assert client.post("/schemas/deadbeef/graphql", json={"query": "{ x }"}).status_code == 404


def test_sdl_endpoint_returns_plaintext(client, schema_id):
    response = client.get(f"/schemas/{schema_id}/sdl")
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/plain")
    assert "type UserVertex" in response.text
    assert "connectUserToUserViaLikesEdge" in response.text


def test_transpile_endpoint_both_flavors(client, schema_id):
    query = '{ user(id: "42") { id } }'
    body = client.post(f"/schemas/{schema_id}/transpile", json={"query": query}).json()
    assert body["gremlin"] == "g.V('42').has_label('User').project('id').by(__.id_()).next()"
    assert body["counters"] == {"s": 1, "w": 0, "k": 0, "d": 0, "fieldVisits": 1}

    body = client.post(
        f"/schemas/{schema_id}/transpile", json={"query": query, "flavor": "groovy"}
    ).json()
    assert body["gremlin"] == "g.V('42').hasLabel('User').project('id').by(id()).next()"


def test_transpile_endpoint_accepts_variables(client, schema_id):
    payload = {
        "query": "query Q($n: Int) { userList(where: {age_GT: $n}) { name } }",
        "variables": {"n": 21},
    }
    body = client.post(f"/schemas/{schema_id}/transpile", json=payload).json()
    assert "P.gt(21)" in body["gremlin"]
    assert body["counters"]["w"] == 1


def test_transpile_endpoint_rejects_bad_requests(client, schema_id):
    url = f"/schemas/{schema_id}/transpile"

    response = client.post(url, json={"query": "{ user(id: "})
    assert response.status_code == 400
    error = response.json()["errors"][0]
    assert set(error) == {"message", "line", "column"}

    response = client.post(url, json={"query": "{ nope { id } }"})
    assert response.status_code == 400
    assert "nope" in response.json()["errors"][0]["message"]

    response = client.post(url, json={"query": "{ user(id: \"1\") { id } }", "flavor": "java"})
    assert response.status_code == 400
    assert "flavor" in response.json()["errors"][0]["message"]

    response = client.post(url, json={"flavor": "python"})
    assert response.status_code == 400


def test_graphql_endpoint_roundtrip(client, schema_id):
    url = f"/schemas/{schema_id}/graphql"

    add = 'mutation { addUserVertex(data: {name: "Ada", age: 30}) }'
    body = client.post(url, json={"query": add}).json()
    assert body == {"data": {"addUserVertex": "1"}}

    body = client.post(url, json={
        "query": "mutation($d: UserVertexInput!) { addUserVertex(data: $d) }",
        "variables": {"d": {"name": "Bob"}},
    }).json()
    assert body == {"data": {"addUserVertex": "2"}}

    connect = ("mutation { connectUserToUserViaLikesEdge("
               'source_user_id: "1", target_user_id: "2", data: {strength: 0.5}) }')
    body = client.post(url, json={"query": connect}).json()
    assert body == {"data": {"connectUserToUserViaLikesEdge": "3"}}

    query = '{ user(id: "1") { name likesOut { strength user { name } } } }'
    body = client.post(url, json={"query": query}).json()
    assert body["data"] == {
        "user": {
            "name": "Ada",
            "likesOut": [{"strength": 0.5, "user": {"name": "Bob"}}],
        }
    }


def test_graphql_endpoint_error_envelopes(client, schema_id):
    url = f"/schemas/{schema_id}/graphql"

    response = client.post(url, json={"query": "{ user(id: \"9\") { id } }"})
    assert response.status_code == 200
    body = response.json()
    assert body["data"] is None
    assert "no result" in body["errors"][0]["message"]

    body = client.post(url, json={"query": "{ user { id } }"}).json()
    assert body["data"] is None
    assert body["errors"][0]["line"] == 1

    response = client.post(url, json={})
    assert response.status_code == 400


def test_put_replaces_schema_and_clears_store(client, schema_id):
    url = f"/schemas/{schema_id}/graphql"
    client.post(url, json={"query": 'mutation { addUserVertex(data: {name: "Ada"}) }'})
    assert client.post(url, json={"query": "{ userList { name } }"}).json()["data"] == {
        "userList": [{"name": "Ada"}]
    }

    replacement = todo_schema_dict()
    replacement["vertices"][0]["properties"].append(
        {"key": "email", "datatype": "String", "required": False})
    response = client.put(f"/schemas/{schema_id}", json=replacement)
    assert response.status_code == 200
    assert response.headers["X-Store-Cleared"] == "true"
    assert "cleared" in response.json()["warning"]

    assert "email" in client.get(f"/schemas/{schema_id}/sdl").text
    body = client.post(url, json={"query": "{ userList { name } }"}).json()
    assert body["data"] == {"userList": []}


def test_put_keeps_old_schema_on_invalid_replacement(client, schema_id):
    bad = todo_schema_dict()
    bad["edges"][0]["source"] = "ghost"
    response = client.put(f"/schemas/{schema_id}", json=bad)
    assert response.status_code == 422
    assert "type UserVertex" in client.get(f"/schemas/{schema_id}/sdl").text


def test_persistence_across_restarts(tmp_path):
    first = TestClient(create_app(tmp_path))
    schema_id = first.post("/schemas", json=todo_schema_dict()).json()["id"]
    url = f"/schemas/{schema_id}/graphql"
    first.post(url, json={"query": 'mutation { addUserVertex(data: {name: "Ada", age: 1}) }'})
    first.post(url, json={"query": 'mutation { addTodoVertex(data: {checked: true}) }'})

    second = TestClient(create_app(tmp_path))
    assert second.get("/schemas").json()["schemas"] == [
        {"id": schema_id, "vertices": 2, "edges": 2}
    ]
    body = second.post(url, json={"query": "{ user(id: \"1\") { name age } }"}).json()
    assert body["data"] == {"user": {"name": "Ada", "age": 1}}

    # ids keep counting from where the first process stopped
    body = second.post(url, json={
        "query": 'mutation { addUserVertex(data: {name: "Bob"}) }'
    }).json()
    assert body == {"data": {"addUserVertex": "3"}}

    second.delete(f"/schemas/{schema_id}")
    assert list(tmp_path.glob("*.json")) == []


def test_stray_files_in_data_dir_are_ignored(tmp_path):
    (tmp_path / "notes.json").write_text("{}", "utf-8")
    (tmp_path / "README.txt").write_text("hello", "utf-8")
    client = TestClient(create_app(tmp_path))
    assert client.get("/schemas").json()["schemas"] == []
