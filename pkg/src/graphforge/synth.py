"""GraphQL schema synthesis from a validated graph schema.

Builds a complete CRUD schema: lookup and list roots per vertex, typed
vertex/edge object types with adjacency fields, filter/order/pagination
inputs, mutations, and the GraphElement interface. The structured document
and the SDL text come from the same pass so they cannot drift apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import naming
from .schema import Datatype, EdgeDef, GraphSchema, PropertyDef, VertexDef
from .validation import validate


class SchemaInvalidError(ValueError):
    """Synthesis was attempted on a schema that fails validation."""

    def __init__(self, violations):
        self.violations = violations
        summary = "; ".join(f"{v.rule} {v.subject}" for v in violations)
        super().__init__(f"schema fails validation: {summary}")


@dataclass(frozen=True)
class TypeRef:
    kind: str  # "named" | "list" | "non_null"
    name: str | None = None
    of: TypeRef | None = None

    def render(self) -> str:
        if self.kind == "named":
            return self.name
        if self.kind == "list":
            return f"[{self.of.render()}]"
        return f"{self.of.render()}!"

    def named_type(self) -> str:
        ref = self
        while ref.kind != "named":
            ref = ref.of
        return ref.name

    def is_list(self) -> bool:
        ref = self
        while ref.kind != "named":
            if ref.kind == "list":
                return True
            ref = ref.of
        return False

    def unwrap_non_null(self) -> TypeRef:
        return self.of if self.kind == "non_null" else self


def named(name: str) -> TypeRef:
    return TypeRef("named", name=name)


def non_null(of: TypeRef) -> TypeRef:
    return TypeRef("non_null", of=of)


def list_of(of: TypeRef) -> TypeRef:
    return TypeRef("list", of=of)


@dataclass
class ArgDef:
    name: str
    type: TypeRef


@dataclass
class FieldDef:
    name: str
    type: TypeRef
    args: list[ArgDef] = field(default_factory=list)

    def arg(self, name: str) -> ArgDef | None:
        for a in self.args:
            if a.name == name:
                return a
        return None


@dataclass
class ObjectType:
    name: str
    fields: dict[str, FieldDef]
    interfaces: list[str] = field(default_factory=list)


@dataclass
class InterfaceType:
    name: str
    fields: dict[str, FieldDef]


@dataclass
class InputType:
    name: str
    fields: dict[str, TypeRef]


@dataclass
class EnumType:
    name: str
    values: list[str]


@dataclass(frozen=True)
class FieldOrigin:
    """What a synthesized field stands for in the graph schema."""

    kind: str  # id | label | property | adjacency | vertex_ref | root_single |
    #            root_list | add_vertex | update_vertex | connect_edge |
    #            update_edge | delete_vertex | delete_edge
    vertex: VertexDef | None = None
    edge: EdgeDef | None = None
    direction: str | None = None
    prop: PropertyDef | None = None
    far: VertexDef | None = None


_SCALAR = {
    Datatype.ID: "ID",
    Datatype.STRING: "String",
    Datatype.INT: "Int",
    Datatype.FLOAT: "Float",
    Datatype.BOOLEAN: "Boolean",
}

_FILTER_OPS = ["EQ", "NEQ", "GT", "GTE", "LT", "LTE"]


class GraphQLSchemaDoc:
    """Synthesized GraphQL schema: structured types, origins, and SDL."""

    def __init__(self, schema: GraphSchema):
        self.schema = schema
        self.types: dict[str, ObjectType | InterfaceType | InputType | EnumType] = {}
        self.query: ObjectType | None = None
        self.mutation: ObjectType | None = None
        self.origins: dict[tuple[str, str], FieldOrigin] = {}
        self.sdl: str = ""

    def fields_map(self, type_name: str) -> list[str]:
        return list(self.types[type_name].fields)

    def args_map(self, type_name: str, field_name: str) -> list[str]:
        return [a.name for a in self.types[type_name].fields[field_name].args]

    def type_map(self, type_name: str, field_name: str) -> TypeRef:
        return self.types[type_name].fields[field_name].type

    def impl_map(self, interface_name: str) -> list[str]:
        return [t.name for t in self.types.values()
                if isinstance(t, ObjectType) and interface_name in t.interfaces]

    def roots(self) -> list[str]:
        return list(self.query.fields) if self.query else []

    def origin(self, type_name: str, field_name: str) -> FieldOrigin:
        return self.origins[(type_name, field_name)]

    def object_type(self, name: str) -> ObjectType | None:
        t = self.types.get(name)
        return t if isinstance(t, ObjectType) else None


def _scalar_ref(prop: PropertyDef) -> TypeRef:
    ref = named(_SCALAR[prop.datatype])
    return non_null(ref) if prop.required else ref


def _edge_directions(edge: EdgeDef) -> list[tuple[VertexDef, VertexDef]]:
    """(near, far) viewpoints; a symmetric edge has a single one."""
    pairs = [(edge.source, edge.target)]
    if edge.target is not edge.source:
        pairs.append((edge.target, edge.source))
    return pairs


def _list_field_args(vertex: VertexDef) -> list[ArgDef]:
    args = [ArgDef("where", named(naming.vertex_logic_input_name(vertex)))]
    if vertex.properties:
        args.append(ArgDef("orderBy", list_of(non_null(named(naming.vertex_order_by_input_name(vertex))))))
    args.append(ArgDef("pagination", named("PaginationInput")))
    return args


def _adjacency_args(edge: EdgeDef, far: VertexDef) -> list[ArgDef]:
    args = [ArgDef("whereVertex", named(naming.vertex_logic_input_name(far)))]
    if far.properties:
        args.append(ArgDef("orderByVertex", list_of(non_null(named(naming.vertex_order_by_input_name(far))))))
    if edge.properties:
        args.append(ArgDef("whereEdge", named(naming.edge_logic_input_name(edge))))
        args.append(ArgDef("orderByEdge", list_of(non_null(named(naming.edge_order_by_input_name(edge))))))
    args.append(ArgDef("pagination", named("PaginationInput")))
    return args


def _logic_input(name: str, element: VertexDef | EdgeDef) -> InputType:
    fields: dict[str, TypeRef] = {}
    for prop in element.properties:
        if prop.datatype is Datatype.ID:
            continue
        ops = _FILTER_OPS[:2] if prop.datatype is Datatype.BOOLEAN else _FILTER_OPS
        for op in ops:
            fields[f"{prop.key}_{op}"] = named(_SCALAR[prop.datatype])
    fields["OR"] = list_of(non_null(named(name)))
    fields["AND"] = list_of(non_null(named(name)))
    return InputType(name, fields)


def _order_by_input(name: str, enum_name: str) -> InputType:
    return InputType(name, {"property": non_null(named(enum_name)), "order": non_null(named("OrderDirection"))})


def synthesize(schema: GraphSchema) -> GraphQLSchemaDoc:
    """Generate the full GraphQL schema document for a valid graph schema."""
    violations = validate(schema)
    if violations:
        raise SchemaInvalidError(violations)

    doc = GraphQLSchemaDoc(schema)
    types = doc.types

    def origin(type_name: str, field_name: str, **kw) -> None:
        doc.origins[(type_name, field_name)] = FieldOrigin(**kw)

    if schema.vertices:
        query = ObjectType("Query", {})
        for v in schema.vertices:
            single = naming.root_single_name(v)
            query.fields[single] = FieldDef(single, named(naming.vertex_type_name(v)),
                                            [ArgDef("id", non_null(named("ID")))])
            origin("Query", single, kind="root_single", vertex=v)
            listed = naming.root_list_name(v)
            query.fields[listed] = FieldDef(listed, non_null(list_of(non_null(named(naming.vertex_type_name(v))))),
                                            _list_field_args(v))
            origin("Query", listed, kind="root_list", vertex=v)
        types["Query"] = query
        doc.query = query

        mutation = ObjectType("Mutation", {})
        id_result = non_null(named("ID"))
        for v in schema.vertices:
            add = naming.add_vertex_mutation_name(v)
            add_args = []
            if v.properties:
                add_args.append(ArgDef("data", non_null(named(naming.vertex_input_name(v)))))
            mutation.fields[add] = FieldDef(add, id_result, add_args)
            origin("Mutation", add, kind="add_vertex", vertex=v)

            update = naming.update_vertex_mutation_name(v)
            update_args = [ArgDef("id", non_null(named("ID")))]
            if v.properties:
                update_args.append(ArgDef("data", non_null(named(naming.vertex_input_name(v)))))
            mutation.fields[update] = FieldDef(update, id_result, update_args)
            origin("Mutation", update, kind="update_vertex", vertex=v)

        mutation.fields["deleteVertex"] = FieldDef("deleteVertex", id_result, [ArgDef("id", non_null(named("ID")))])
        origin("Mutation", "deleteVertex", kind="delete_vertex")

        for e in schema.edges:
            connect = naming.connect_edge_mutation_name(e)
            connect_args = [
                ArgDef(naming.connect_source_arg_name(e), non_null(named("ID"))),
                ArgDef(naming.connect_target_arg_name(e), non_null(named("ID"))),
            ]
            if e.properties:
                connect_args.append(ArgDef("data", non_null(named(naming.edge_input_name(e)))))
            mutation.fields[connect] = FieldDef(connect, id_result, connect_args)
            origin("Mutation", connect, kind="connect_edge", edge=e)

            if e.properties:
                update_e = naming.update_edge_mutation_name(e)
                mutation.fields[update_e] = FieldDef(update_e, id_result, [
                    ArgDef("id", non_null(named("ID"))),
                    ArgDef("data", non_null(named(naming.edge_input_name(e)))),
                ])
                origin("Mutation", update_e, kind="update_edge", edge=e)

        mutation.fields["deleteEdge"] = FieldDef("deleteEdge", id_result, [ArgDef("id", non_null(named("ID")))])
        origin("Mutation", "deleteEdge", kind="delete_edge")
        types["Mutation"] = mutation
        doc.mutation = mutation

    for v in schema.vertices:
        tname = naming.vertex_type_name(v)
        obj = ObjectType(tname, {}, interfaces=["GraphElement"])
        obj.fields["id"] = FieldDef("id", non_null(named("ID")))
        origin(tname, "id", kind="id", vertex=v)
        obj.fields["label"] = FieldDef("label", non_null(named("String")))
        origin(tname, "label", kind="label", vertex=v)
        for prop in v.properties:
            obj.fields[prop.key] = FieldDef(prop.key, _scalar_ref(prop))
            origin(tname, prop.key, kind="property", vertex=v, prop=prop)
        for direction, edges in (("out", v.out_edges), ("in", v.in_edges)):
            for e in edges:
                far = e.target if direction == "out" else e.source
                fname = naming.adjacency_field_name(e, direction)
                etype = naming.edge_type_name(v, far, e)
                obj.fields[fname] = FieldDef(fname, non_null(list_of(non_null(named(etype)))),
                                             _adjacency_args(e, far))
                origin(tname, fname, kind="adjacency", vertex=v, edge=e, direction=direction, far=far)
        types[tname] = obj

    for e in schema.edges:
        for near, far in _edge_directions(e):
            tname = naming.edge_type_name(near, far, e)
            obj = ObjectType(tname, {}, interfaces=["GraphElement"])
            obj.fields["id"] = FieldDef("id", non_null(named("ID")))
            origin(tname, "id", kind="id", edge=e)
            obj.fields["label"] = FieldDef("label", non_null(named("String")))
            origin(tname, "label", kind="label", edge=e)
            for prop in e.properties:
                obj.fields[prop.key] = FieldDef(prop.key, _scalar_ref(prop))
                origin(tname, prop.key, kind="property", edge=e, prop=prop)
            ref_name = naming.vertex_ref_field_name(far)
            obj.fields[ref_name] = FieldDef(ref_name, non_null(named(naming.vertex_type_name(far))))
            origin(tname, ref_name, kind="vertex_ref", edge=e, far=far)
            types[tname] = obj

    for v in schema.vertices:
        if v.properties:
            data = InputType(naming.vertex_input_name(v), {p.key: _scalar_ref(p) for p in v.properties})
            types[data.name] = data
    for e in schema.edges:
        if e.properties:
            data = InputType(naming.edge_input_name(e), {p.key: _scalar_ref(p) for p in e.properties})
            types[data.name] = data
    for v in schema.vertices:
        logic = _logic_input(naming.vertex_logic_input_name(v), v)
        types[logic.name] = logic
    for e in schema.edges:
        if e.properties:
            logic = _logic_input(naming.edge_logic_input_name(e), e)
            types[logic.name] = logic
    for v in schema.vertices:
        if v.properties:
            order = _order_by_input(naming.vertex_order_by_input_name(v), naming.vertex_property_enum_name(v))
            types[order.name] = order
    for e in schema.edges:
        if e.properties:
            order = _order_by_input(naming.edge_order_by_input_name(e), naming.edge_property_enum_name(e))
            types[order.name] = order

    types["PaginationInput"] = InputType("PaginationInput", {
        "offset": non_null(named("Int")),
        "limit": non_null(named("Int")),
    })
    types["OrderDirection"] = EnumType("OrderDirection", ["ASC", "DESC"])
    for v in schema.vertices:
        if v.properties:
            enum = EnumType(naming.vertex_property_enum_name(v), [p.key for p in v.properties])
            types[enum.name] = enum
    for e in schema.edges:
        if e.properties:
            enum = EnumType(naming.edge_property_enum_name(e), [p.key for p in e.properties])
            types[enum.name] = enum

    element = InterfaceType("GraphElement", {
        "id": FieldDef("id", non_null(named("ID"))),
        "label": FieldDef("label", non_null(named("String"))),
    })
    types["GraphElement"] = element

    doc.sdl = emit_sdl(doc)
    return doc


def _render_field(f: FieldDef) -> str:
    args = ""
    if f.args:
        args = "(" + ", ".join(f"{a.name}: {a.type.render()}" for a in f.args) + ")"
    return f"  {f.name}{args}: {f.type.render()}"


def emit_sdl(doc: GraphQLSchemaDoc) -> str:
    """Render the document as SDL text, deterministically."""
    blocks: list[str] = []
    if doc.query is None:
        blocks.append("# No vertex definitions: no query or mutation operations were generated.")
    for t in doc.types.values():
        if isinstance(t, ObjectType):
            implements = f" implements {' & '.join(t.interfaces)}" if t.interfaces else ""
            lines = [f"type {t.name}{implements} {{"]
            lines += [_render_field(f) for f in t.fields.values()]
        elif isinstance(t, InterfaceType):
            lines = [f"interface {t.name} {{"]
            lines += [_render_field(f) for f in t.fields.values()]
        elif isinstance(t, InputType):
            lines = [f"input {t.name} {{"]
            lines += [f"  {fname}: {ref.render()}" for fname, ref in t.fields.items()]
        else:
            lines = [f"enum {t.name} {{"]
            lines += [f"  {value}" for value in t.values]
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
