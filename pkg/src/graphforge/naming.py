"""Naming rules for everything the GraphQL synthesizer generates.

Shared by the validator (collision checks) and the synthesizer so both
always agree on the generated names.
"""

from __future__ import annotations

from .schema import EdgeDef, GraphSchema, VertexDef

RESERVED_LABELS = frozenset({"Query", "Mutation", "GraphElement", "PaginationInput", "OrderDirection"})


def lcfirst(s: str) -> str:
    return s[:1].lower() + s[1:]


def ucfirst(s: str) -> str:
    return s[:1].upper() + s[1:]


def vertex_type_name(v: VertexDef) -> str:
    return f"{v.label}Vertex"


def edge_type_name(near: VertexDef, far: VertexDef, edge: EdgeDef) -> str:
    """Edge object type as seen from the ``near`` endpoint."""
    return f"{near.label}To{far.label}{ucfirst(edge.label)}Edge"


def root_single_name(v: VertexDef) -> str:
    return lcfirst(v.label)


def root_list_name(v: VertexDef) -> str:
    return lcfirst(v.label) + "List"


def adjacency_field_name(edge: EdgeDef, direction: str) -> str:
    suffix = "Out" if direction == "out" else "In"
    return lcfirst(edge.label) + suffix


def vertex_ref_field_name(far: VertexDef) -> str:
    return lcfirst(far.label)


def vertex_input_name(v: VertexDef) -> str:
    return f"{v.label}VertexInput"


def vertex_logic_input_name(v: VertexDef) -> str:
    return f"{v.label}VertexLogicInput"


def vertex_order_by_input_name(v: VertexDef) -> str:
    return f"{v.label}VertexOrderByInput"


def vertex_property_enum_name(v: VertexDef) -> str:
    return f"{v.label}VertexProperty"


def edge_base_name(edge: EdgeDef) -> str:
    """Authored-direction base used for edge input/enum names."""
    return f"{edge.source.label}To{edge.target.label}{ucfirst(edge.label)}Edge"


def edge_input_name(edge: EdgeDef) -> str:
    return f"{edge.source.label}To{edge.target.label}Via{ucfirst(edge.label)}EdgeInput"


def edge_logic_input_name(edge: EdgeDef) -> str:
    return edge_base_name(edge) + "LogicInput"


def edge_order_by_input_name(edge: EdgeDef) -> str:
    return edge_base_name(edge) + "OrderByInput"


def edge_property_enum_name(edge: EdgeDef) -> str:
    return edge_base_name(edge) + "Property"


def add_vertex_mutation_name(v: VertexDef) -> str:
    return f"add{v.label}Vertex"


def update_vertex_mutation_name(v: VertexDef) -> str:
    return f"update{v.label}Vertex"


def connect_edge_mutation_name(edge: EdgeDef) -> str:
    return f"connect{edge.source.label}To{edge.target.label}Via{ucfirst(edge.label)}Edge"


def update_edge_mutation_name(edge: EdgeDef) -> str:
    return f"update{edge.source.label}To{edge.target.label}{ucfirst(edge.label)}Edge"


def connect_source_arg_name(edge: EdgeDef) -> str:
    return f"source_{lcfirst(edge.source.label)}_id"


def connect_target_arg_name(edge: EdgeDef) -> str:
    return f"target_{lcfirst(edge.target.label)}_id"


def synthesized_name_inventory(schema: GraphSchema) -> list[tuple[str, str, str]]:
    """Every name synthesis would generate, as (scope, name, origin) triples.

    Two entries with the same (scope, name) but different origins collide.
    Edges with unresolved endpoints are skipped; the validator reports those
    separately.
    """
    entries: list[tuple[str, str, str]] = []

    def add(scope: str, name: str, origin: str) -> None:
        entries.append((scope, name, origin))

    for builtin in ("Query", "Mutation", "GraphElement", "PaginationInput", "OrderDirection"):
        add("type", builtin, f"builtin:{builtin}")
    add("field:Mutation", "deleteVertex", "builtin:deleteVertex")
    add("field:Mutation", "deleteEdge", "builtin:deleteEdge")

    for v in schema.vertices:
        origin = f"vertex:{v.id}"
        tname = vertex_type_name(v)
        add("type", tname, origin)
        add("type", vertex_logic_input_name(v), origin)
        if v.properties:
            add("type", vertex_input_name(v), origin)
            add("type", vertex_order_by_input_name(v), origin)
            add("type", vertex_property_enum_name(v), origin)
        add("field:Query", root_single_name(v), origin)
        add("field:Query", root_list_name(v), origin)
        add("field:Mutation", add_vertex_mutation_name(v), origin)
        add("field:Mutation", update_vertex_mutation_name(v), origin)
        add(f"field:{tname}", "id", "builtin:id")
        add(f"field:{tname}", "label", "builtin:label")
        for p in v.properties:
            add(f"field:{tname}", p.key, f"property:{v.id}.{p.key}")
        for e in v.out_edges:
            add(f"field:{tname}", adjacency_field_name(e, "out"), f"edge:{e.id}:out")
        for e in v.in_edges:
            add(f"field:{tname}", adjacency_field_name(e, "in"), f"edge:{e.id}:in")

    for e in schema.edges:
        if e.source is None or e.target is None:
            continue
        origin = f"edge:{e.id}"
        pairs = [(e.source, e.target)]
        if e.target is not e.source:
            pairs.append((e.target, e.source))
        for near, far in pairs:
            add("type", edge_type_name(near, far, e), origin)
        if e.properties:
            add("type", edge_input_name(e), origin)
            add("type", edge_logic_input_name(e), origin)
            add("type", edge_order_by_input_name(e), origin)
            add("type", edge_property_enum_name(e), origin)
            add("field:Mutation", update_edge_mutation_name(e), origin)
        add("field:Mutation", connect_edge_mutation_name(e), origin)
        for near, far in pairs:
            tname = edge_type_name(near, far, e)
            add(f"field:{tname}", "id", "builtin:id")
            add(f"field:{tname}", "label", "builtin:label")
            for p in e.properties:
                add(f"field:{tname}", p.key, f"property:{e.id}.{p.key}")
            add(f"field:{tname}", vertex_ref_field_name(far), f"vertexref:{far.id}")

    return entries
