"""REST service: schema registry, SDL views, transpilation, and execution.

Each registered schema gets its own synthesized GraphQL document and its
own graph store. Registered schemas and their stores survive restarts
when a data directory is configured.
"""

from __future__ import annotations

import json
import re
import uuid
from pathlib import Path
from typing import Any

from fastapi import Body, FastAPI, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .engine import GraphStore, NotFound, execute
from .frontend import RequestValidationError, expand, parse_request
from .gql.lexer import GraphQLSyntaxError
from .ir import FLAVORS, serialize
from .schema import GraphSchema, SchemaFormatError
from .synth import GraphQLSchemaDoc, synthesize
from .transpiler import compile_tree
from .validation import validate

_ID_PATTERN = re.compile(r"[a-f0-9]{8}\Z")


class SchemaEntry:
    def __init__(self, schema: GraphSchema, doc: GraphQLSchemaDoc, store: GraphStore):
        self.schema = schema
        self.doc = doc
        self.store = store


class SchemaRegistry:
    """Registered schemas plus their stores, optionally file-backed."""

    def __init__(self, data_dir: str | Path | None = None):
        self.entries: dict[str, SchemaEntry] = {}
        self.data_dir = Path(data_dir) if data_dir is not None else None
        if self.data_dir is not None:
            self.data_dir.mkdir(parents=True, exist_ok=True)
            for path in sorted(self.data_dir.glob("*.json")):
                if not _ID_PATTERN.match(path.stem):
                    continue
                payload = json.loads(path.read_text("utf-8"))
                schema = GraphSchema.from_dict(payload["schema"])
                entry = SchemaEntry(schema, synthesize(schema), GraphStore.from_dict(payload["store"]))
                self.entries[path.stem] = entry

    def _persist(self, schema_id: str) -> None:
        if self.data_dir is None:
            return
        entry = self.entries[schema_id]
        payload = {"schema": entry.schema.to_dict(), "store": entry.store.to_dict()}
        path = self.data_dir / f"{schema_id}.json"
        path.write_text(json.dumps(payload, indent=2) + "\n", "utf-8")

    def create(self, schema: GraphSchema) -> str:
        schema_id = uuid.uuid4().hex[:8]
        while schema_id in self.entries:
            schema_id = uuid.uuid4().hex[:8]
        self.entries[schema_id] = SchemaEntry(schema, synthesize(schema), GraphStore())
        self._persist(schema_id)
        return schema_id

    def replace(self, schema_id: str, schema: GraphSchema) -> None:
        self.entries[schema_id] = SchemaEntry(schema, synthesize(schema), GraphStore())
        self._persist(schema_id)

    def delete(self, schema_id: str) -> None:
        del self.entries[schema_id]
        if self.data_dir is not None:
            (self.data_dir / f"{schema_id}.json").unlink(missing_ok=True)

    def save_store(self, schema_id: str) -> None:
        self._persist(schema_id)


def _violation_payload(violations) -> dict[str, Any]:
    return {
        "violations": [
            {"rule": v.rule, "subject": v.subject, "message": v.message}
            for v in violations
        ]
    }


def _format_error(message: str) -> JSONResponse:
    payload = {"violations": [{"rule": "FORMAT", "subject": "schema", "message": message}]}
    return JSONResponse(payload, status_code=422)


def _not_known(schema_id: str) -> JSONResponse:
    return JSONResponse({"detail": f"unknown schema {schema_id!r}"}, status_code=404)


def _check_schema(payload: Any) -> tuple[GraphSchema | None, JSONResponse | None]:
    if not isinstance(payload, dict):
        return None, _format_error("schema document must be a JSON object")
    try:
        schema = GraphSchema.from_dict(payload)
    except SchemaFormatError as err:
        return None, _format_error(str(err))
    violations = validate(schema)
    if violations:
        return None, JSONResponse(_violation_payload(violations), status_code=422)
    return schema, None


def _request_errors(err: Exception) -> list[dict[str, Any]]:
    if isinstance(err, GraphQLSyntaxError):
        return [{"message": err.message, "line": err.line, "column": err.column}]
    if isinstance(err, RequestValidationError):
        return [
            {"message": p.message, "line": p.line, "column": p.column}
            for p in err.problems
        ]
    raise err


def create_app(data_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="graphforge", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry = SchemaRegistry(data_dir)
    app.state.registry = registry

    @app.get("/schemas")
    def list_schemas() -> dict[str, Any]:
        return {
            "schemas": [
                {
                    "id": schema_id,
                    "vertices": len(entry.schema.vertices),
                    "edges": len(entry.schema.edges),
                }
                for schema_id, entry in registry.entries.items()
            ]
        }

    @app.post("/schemas", status_code=201)
    def create_schema(payload: Any = Body(...)):
        schema, error = _check_schema(payload)
        if error is not None:
            return error
        schema_id = registry.create(schema)
        return {"id": schema_id}

    @app.get("/schemas/{schema_id}")
    def read_schema(schema_id: str):
        entry = registry.entries.get(schema_id)
        if entry is None:
            return _not_known(schema_id)
        return entry.schema.to_dict()

    @app.put("/schemas/{schema_id}")
    def replace_schema(schema_id: str, response: Response, payload: Any = Body(...)):
        if schema_id not in registry.entries:
            return _not_known(schema_id)
        schema, error = _check_schema(payload)
        if error is not None:
            return error
        registry.replace(schema_id, schema)
        response.headers["X-Store-Cleared"] = "true"
        return {"id": schema_id, "warning": "schema replaced; its store was cleared"}

    @app.delete("/schemas/{schema_id}", status_code=204)
    def delete_schema(schema_id: str):
        if schema_id not in registry.entries:
            return _not_known(schema_id)
        registry.delete(schema_id)
        return Response(status_code=204)

    @app.get("/schemas/{schema_id}/sdl")
    def read_sdl(schema_id: str):
        entry = registry.entries.get(schema_id)
        if entry is None:
            return _not_known(schema_id)
        return PlainTextResponse(entry.doc.sdl)

    @app.post("/schemas/{schema_id}/transpile")
    def transpile(schema_id: str, payload: dict = Body(...)):
        entry = registry.entries.get(schema_id)
        if entry is None:
            return _not_known(schema_id)
        flavor = payload.get("flavor", "python")
        if flavor not in FLAVORS:
            return JSONResponse(
                {"errors": [{"message": f"unknown flavor {flavor!r}"}]}, status_code=400)
        query = payload.get("query")
        if not isinstance(query, str):
            return JSONResponse(
                {"errors": [{"message": "request must include a query string"}]}, status_code=400)
        try:
            tree = expand(parse_request(query), entry.doc,
                          payload.get("variables"), payload.get("operationName"))
        except (GraphQLSyntaxError, RequestValidationError) as err:
            return JSONResponse({"errors": _request_errors(err)}, status_code=400)
        compiled = compile_tree(tree)
        counters = compiled.counters
        return {
            "gremlin": serialize(compiled.steps, flavor),
            "counters": {
                "s": counters.s,
                "w": counters.w,
                "k": counters.k,
                "d": counters.d,
                "fieldVisits": counters.field_visits,
            },
        }

    @app.post("/schemas/{schema_id}/graphql")
    def graphql(schema_id: str, payload: dict = Body(...)):
        entry = registry.entries.get(schema_id)
        if entry is None:
            return _not_known(schema_id)
        query = payload.get("query")
        if not isinstance(query, str):
            return JSONResponse(
                {"errors": [{"message": "request must include a query string"}]}, status_code=400)
        try:
            tree = expand(parse_request(query), entry.doc,
                          payload.get("variables"), payload.get("operationName"))
        except (GraphQLSyntaxError, RequestValidationError) as err:
            return {"data": None, "errors": _request_errors(err)}
        compiled = compile_tree(tree)
        try:
            value = execute(entry.store, compiled.steps)
        except NotFound as err:
            return {"data": None, "errors": [{"message": str(err)}]}
        if tree.operation == "mutation":
            registry.save_store(schema_id)
        return {"data": {tree.root.key: value}}

    return app
