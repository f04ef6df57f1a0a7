"""graphforge: generate a typed GraphQL layer for property graphs and
transpile requests into single Gremlin traversals."""

from .schema import (
    Datatype,
    EdgeDef,
    GraphSchema,
    PropertyDef,
    SchemaFormatError,
    VertexDef,
    adjacent_edges,
    parse_schema_json,
    serialize_schema_json,
)
from .validation import Violation, validate

__version__ = "0.1.0"

__all__ = [
    "Datatype",
    "EdgeDef",
    "GraphSchema",
    "PropertyDef",
    "SchemaFormatError",
    "VertexDef",
    "Violation",
    "adjacent_edges",
    "parse_schema_json",
    "serialize_schema_json",
    "validate",
    "__version__",
]
