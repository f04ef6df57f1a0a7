"""GraphQL request validation and expansion.

Turns a parsed document plus variables into a selection tree: fragments
inlined, duplicate selections merged, arguments coerced against the
synthesized schema and structured into filter/order/pagination payloads.
Also hosts the SDL soundness checker used against emitted schemas.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Union

from . import naming
from .gql import parse_document, parse_sdl
from .gql.ast import (
    Argument,
    BooleanValue,
    Document,
    EnumTypeDefNode,
    EnumValue,
    Field,
    FloatValue,
    FragmentSpread,
    InlineFragment,
    InputObjectTypeDefNode,
    InterfaceTypeDefNode,
    IntValue,
    ListTypeNode,
    ListValue,
    NamedTypeNode,
    NonNullTypeNode,
    NullValue,
    ObjectTypeDefNode,
    ObjectValue,
    OperationDefinition,
    SelectionSet,
    StringValue,
    TypeNode,
    ValueNode,
    Variable,
)
from .gql.lexer import GraphQLSyntaxError
from .synth import (
    EnumType,
    FieldDef,
    FieldOrigin,
    GraphQLSchemaDoc,
    InputType,
    InterfaceType,
    ObjectType,
    TypeRef,
)

SCALARS = frozenset({"ID", "String", "Int", "Float", "Boolean"})
INT_MIN, INT_MAX = -(2 ** 31), 2 ** 31 - 1

parse_request = parse_document


@dataclass(frozen=True)
class RequestProblem:
    message: str
    line: int | None = None
    column: int | None = None

    def __str__(self) -> str:
        if self.line is not None:
            return f"{self.message} at {self.line}:{self.column}"
        return self.message


class RequestValidationError(ValueError):
    def __init__(self, problems: list[RequestProblem]):
        self.problems = problems
        super().__init__("; ".join(str(p) for p in problems))


# --- selection tree ----------------------------------------------------------


@dataclass(frozen=True)
class LogicLeaf:
    property: str
    op: str  # EQ NEQ GT GTE LT LTE
    value: Any


@dataclass(frozen=True)
class LogicAnd:
    children: tuple["LogicCondition", ...]


@dataclass(frozen=True)
class LogicOr:
    children: tuple["LogicCondition", ...]


LogicCondition = Union[LogicLeaf, LogicAnd, LogicOr]


@dataclass(frozen=True)
class OrderTerm:
    property: str
    direction: str  # ASC | DESC


@dataclass(frozen=True)
class OrderSpec:
    terms: tuple[OrderTerm, ...]


@dataclass(frozen=True)
class PaginationSpec:
    offset: int
    limit: int


@dataclass
class SelectionNode:
    name: str
    key: str
    origin: FieldOrigin
    children: list["SelectionNode"] = dc_field(default_factory=list)
    id_arg: str | None = None
    where: LogicCondition | None = None
    where_vertex: LogicCondition | None = None
    where_edge: LogicCondition | None = None
    order_by: OrderSpec | None = None
    order_by_vertex: OrderSpec | None = None
    order_by_edge: OrderSpec | None = None
    pagination: PaginationSpec | None = None
    data: dict[str, Any] | None = None
    source_id: str | None = None
    target_id: str | None = None


@dataclass
class SelectionTree:
    operation: str  # query | mutation
    root: SelectionNode
    s: int = 0
    w: int = 0
    k: int = 0
    d: int = 0


def count_logic_leaves(cond: LogicCondition | None) -> int:
    if cond is None:
        return 0
    if isinstance(cond, LogicLeaf):
        return 1
    return sum(count_logic_leaves(c) for c in cond.children)


def _node_count(node: SelectionNode) -> int:
    return len(node.children) + sum(_node_count(c) for c in node.children)


def _filter_count(node: SelectionNode) -> int:
    own = sum(count_logic_leaves(c) for c in (node.where, node.where_vertex, node.where_edge))
    return own + sum(_filter_count(c) for c in node.children)


def _order_count(node: SelectionNode) -> int:
    own = sum(len(spec.terms) for spec in (node.order_by, node.order_by_vertex, node.order_by_edge) if spec)
    return own + sum(_order_count(c) for c in node.children)


def _adjacency_depth(node: SelectionNode) -> int:
    deepest = max((_adjacency_depth(c) for c in node.children), default=0)
    return deepest + (1 if node.origin.kind == "adjacency" else 0)


# --- value coercion ----------------------------------------------------------


_ABSENT = object()


class _CoercionError(Exception):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column


def _render_type_node(node: TypeNode) -> str:
    if isinstance(node, NamedTypeNode):
        return node.name
    if isinstance(node, ListTypeNode):
        return f"[{_render_type_node(node.of)}]"
    return f"{_render_type_node(node.of)}!"


def _compatible(declared: TypeNode, expected: TypeRef, has_default: bool) -> bool:
    if expected.kind == "non_null":
        if isinstance(declared, NonNullTypeNode):
            return _compatible(declared.of, expected.of, has_default)
        return has_default and _compatible(declared, expected.of, has_default)
    if isinstance(declared, NonNullTypeNode):
        return _compatible(declared.of, expected, has_default)
    if expected.kind == "list":
        return isinstance(declared, ListTypeNode) and _compatible(declared.of, expected.of, has_default)
    return isinstance(declared, NamedTypeNode) and declared.name == expected.name


def _coerce_scalar(name: str, value: Any, where: str) -> Any:
    # value is a python object at this point (literal already unpacked)
    if name == "Int":
        if isinstance(value, bool) or not isinstance(value, int):
            raise _CoercionError(f"{where}: expected Int, got {value!r}")
        if not INT_MIN <= value <= INT_MAX:
            raise _CoercionError(f"{where}: Int value {value} is out of 32-bit range")
        return value
    if name == "Float":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise _CoercionError(f"{where}: expected Float, got {value!r}")
        return float(value)
    if name == "String":
        if not isinstance(value, str):
            raise _CoercionError(f"{where}: expected String, got {value!r}")
        return value
    if name == "ID":
        if isinstance(value, bool):
            raise _CoercionError(f"{where}: expected ID, got {value!r}")
        if isinstance(value, int):
            return str(value)
        if isinstance(value, str):
            return value
        raise _CoercionError(f"{where}: expected ID, got {value!r}")
    if name == "Boolean":
        if not isinstance(value, bool):
            raise _CoercionError(f"{where}: expected Boolean, got {value!r}")
        return value
    raise _CoercionError(f"{where}: unknown scalar {name}")


# --- the expander ------------------------------------------------------------


class _Expander:
    def __init__(self, document: Document, doc: GraphQLSchemaDoc,
                 variables: dict[str, Any] | None, operation_name: str | None):
        self.document = document
        self.doc = doc
        self.variables_in = variables or {}
        self.operation_name = operation_name
        self.problems: list[RequestProblem] = []
        self.fragments = {}
        self.used_fragments: set[str] = set()
        self.var_values: dict[str, Any] = {}
        self.var_defs: dict[str, Any] = {}
        self.used_variables: set[str] = set()

    def fail(self, message: str, node: Any = None) -> None:
        line = getattr(node, "line", None)
        column = getattr(node, "column", None)
        self.problems.append(RequestProblem(message, line, column))

    def finish(self) -> None:
        if self.problems:
            raise RequestValidationError(self.problems)

    # -- entry point -----------------------------------------------------------

    def run(self) -> SelectionTree:
        op = self._select_operation()
        if op.directives:
            self.fail("directives are not supported", op.directives[0])
        self._coerce_variables(op)
        self.finish()

        root_type = "Query" if op.operation == "query" else "Mutation"
        if self.doc.types.get(root_type) is None:
            self.fail(f"the schema defines no {op.operation} operations", op)
            self.finish()

        entries = self._collect(op.selection_set, root_type, root_type)
        children = self._build_nodes(entries, root_type)
        self.finish()
        if len(children) != 1:
            self.fail(f"exactly one root field per request is supported, found {len(children)}", op)
            self.finish()

        for name in self.var_defs:
            if name not in self.used_variables:
                self.fail(f"variable ${name} is never used", self.var_defs[name])
        for name in self.document.fragments():
            if name not in self.used_fragments:
                self.fail(f"fragment {name!r} is never used")
        self.finish()

        root = children[0]
        tree = SelectionTree(op.operation, root)
        tree.s = _node_count(root)
        tree.w = _filter_count(root)
        tree.k = _order_count(root)
        tree.d = _adjacency_depth(root)
        return tree

    def _select_operation(self) -> OperationDefinition:
        ops = self.document.operations()
        seen_frags: set[str] = set()
        for frag_name in [d.name for d in self.document.definitions if not isinstance(d, OperationDefinition)]:
            if frag_name in seen_frags:
                self.fail(f"duplicate fragment name {frag_name!r}")
            seen_frags.add(frag_name)
        self.fragments = self.document.fragments()
        named = [o.name for o in ops if o.name]
        if len(named) != len(set(named)):
            self.fail("operation names must be unique")
        if len(ops) > 1 and any(o.name is None for o in ops):
            self.fail("anonymous operations are not allowed in multi-operation documents")
        if self.operation_name is not None:
            matches = [o for o in ops if o.name == self.operation_name]
            if not matches:
                self.fail(f"unknown operation {self.operation_name!r}")
                self.finish()
            return matches[0]
        if len(ops) == 1:
            return ops[0]
        self.fail("operationName is required when a document defines several operations")
        self.finish()
        raise AssertionError("unreachable")

    # -- variables -------------------------------------------------------------

    def _coerce_variables(self, op: OperationDefinition) -> None:
        for vd in op.variable_definitions:
            if vd.name in self.var_defs:
                self.fail(f"duplicate variable ${vd.name}", vd)
                continue
            self.var_defs[vd.name] = vd
            base = vd.type
            while isinstance(base, (ListTypeNode, NonNullTypeNode)):
                base = base.of
            target = self.doc.types.get(base.name)
            if base.name not in SCALARS and not isinstance(target, (InputType, EnumType)):
                self.fail(f"variable ${vd.name} must have an input type, got {_render_type_node(vd.type)}", vd)
                continue
            type_ref = self._type_node_to_ref(vd.type)
            try:
                if vd.name in self.variables_in:
                    self.var_values[vd.name] = self._coerce(self.variables_in[vd.name], type_ref,
                                                            where=f"variable ${vd.name}")
                elif vd.default is not None:
                    self.var_values[vd.name] = self._coerce(vd.default, type_ref,
                                                            where=f"default of ${vd.name}")
                elif isinstance(vd.type, NonNullTypeNode):
                    self.fail(f"variable ${vd.name} of required type "
                              f"{_render_type_node(vd.type)} was not provided", vd)
                else:
                    self.var_values[vd.name] = _ABSENT
            except _CoercionError as err:
                self.fail(err.message, vd)

    def _type_node_to_ref(self, node: TypeNode) -> TypeRef:
        if isinstance(node, NamedTypeNode):
            return TypeRef("named", name=node.name)
        if isinstance(node, ListTypeNode):
            return TypeRef("list", of=self._type_node_to_ref(node.of))
        return TypeRef("non_null", of=self._type_node_to_ref(node.of))

    # -- coercion --------------------------------------------------------------

    def _coerce(self, value: Any, type_ref: TypeRef, where: str) -> Any:
        if isinstance(value, Variable):
            vd = self.var_defs.get(value.name)
            if vd is None:
                raise _CoercionError(f"{where}: undefined variable ${value.name}", value.line, value.column)
            self.used_variables.add(value.name)
            if not _compatible(vd.type, type_ref, vd.default is not None):
                raise _CoercionError(
                    f"{where}: variable ${value.name} of type {_render_type_node(vd.type)} "
                    f"cannot be used where {type_ref.render()} is expected", value.line, value.column)
            return self.var_values.get(value.name, _ABSENT)

        if type_ref.kind == "non_null":
            out = self._coerce(value, type_ref.of, where)
            if out is None or out is _ABSENT:
                raise _CoercionError(f"{where}: value of required type {type_ref.render()} may not be null")
            return out

        if isinstance(value, NullValue) or value is None:
            return None

        if type_ref.kind == "list":
            if isinstance(value, ListValue):
                items = [self._coerce(v, type_ref.of, f"{where}[{i}]") for i, v in enumerate(value.items)]
            elif isinstance(value, list):
                items = [self._coerce(v, type_ref.of, f"{where}[{i}]") for i, v in enumerate(value)]
            else:
                items = [self._coerce(value, type_ref.of, where)]
            return [None if v is _ABSENT else v for v in items]

        target = self.doc.types.get(type_ref.name)
        if isinstance(target, InputType):
            return self._coerce_input_object(value, target, where)
        if isinstance(target, EnumType):
            if isinstance(value, EnumValue):
                name = value.name
            elif isinstance(value, str):
                name = value
            else:
                raise _CoercionError(f"{where}: expected {target.name} enum value, got {value!r}")
            if name not in target.values:
                raise _CoercionError(f"{where}: {name!r} is not a value of enum {target.name}")
            return name
        if type_ref.name in SCALARS:
            return _coerce_scalar(type_ref.name, self._unwrap_literal(value, where), where)
        raise _CoercionError(f"{where}: {type_ref.name} is not an input type")

    def _unwrap_literal(self, value: Any, where: str) -> Any:
        if isinstance(value, (IntValue, FloatValue, StringValue, BooleanValue)):
            return value.value
        if isinstance(value, EnumValue):
            raise _CoercionError(f"{where}: unexpected enum value {value.name!r}")
        if isinstance(value, (ListValue, ObjectValue)):
            raise _CoercionError(f"{where}: unexpected composite value")
        return value

    def _coerce_input_object(self, value: Any, target: InputType, where: str) -> dict[str, Any]:
        if isinstance(value, ObjectValue):
            raw = {f.name: f.value for f in value.fields}
        elif isinstance(value, dict):
            raw = value
        else:
            raise _CoercionError(f"{where}: expected {target.name} object, got {value!r}")
        out: dict[str, Any] = {}
        for fname in raw:
            if fname not in target.fields:
                raise _CoercionError(f"{where}: unknown field {fname!r} on {target.name}")
        for fname, ftype in target.fields.items():
            if fname in raw:
                coerced = self._coerce(raw[fname], ftype, f"{where}.{fname}")
                if coerced is not _ABSENT:
                    out[fname] = coerced
            elif ftype.kind == "non_null":
                raise _CoercionError(f"{where}: missing required field {fname!r} of {target.name}")
        # preserve the authored key order for deterministic downstream handling
        return {k: out[k] for k in raw if k in out}

    # -- field collection ------------------------------------------------------

    def _collect(self, sset: SelectionSet, concrete: str, scope: str,
                 active: frozenset = frozenset(),
                 entries: dict[str, list[tuple[Field, str]]] | None = None):
        if entries is None:
            entries = {}
        for sel in sset.selections:
            if isinstance(sel, Field):
                if sel.directives:
                    self.fail("directives are not supported", sel.directives[0])
                entries.setdefault(sel.response_key, []).append((sel, scope))
            elif isinstance(sel, FragmentSpread):
                if sel.directives:
                    self.fail("directives are not supported", sel.directives[0])
                frag = self.fragments.get(sel.name)
                if frag is None:
                    self.fail(f"unknown fragment {sel.name!r}", sel)
                    continue
                if sel.name in active:
                    self.fail(f"fragment cycle through {sel.name!r}", sel)
                    continue
                self.used_fragments.add(sel.name)
                if frag.directives:
                    self.fail("directives are not supported", frag.directives[0])
                if self._fragment_applies(frag.type_condition, concrete, sel):
                    self._collect(frag.selection_set, concrete, frag.type_condition,
                                  active | {sel.name}, entries)
            else:  # InlineFragment
                if sel.directives:
                    self.fail("directives are not supported", sel.directives[0])
                condition = sel.type_condition
                if condition is None:
                    self._collect(sel.selection_set, concrete, scope, active, entries)
                elif self._fragment_applies(condition, concrete, sel):
                    self._collect(sel.selection_set, concrete, condition, active, entries)
        return entries

    def _fragment_applies(self, condition: str, concrete: str, node: Any) -> bool:
        target = self.doc.types.get(condition)
        if not isinstance(target, (ObjectType, InterfaceType)):
            self.fail(f"unknown type condition {condition!r}", node)
            return False
        if isinstance(target, InterfaceType):
            concrete_type = self.doc.types.get(concrete)
            return isinstance(concrete_type, ObjectType) and condition in concrete_type.interfaces
        return condition == concrete

    # -- node construction -----------------------------------------------------

    def _field_def(self, scope: str, name: str, node: Field) -> FieldDef | None:
        holder = self.doc.types.get(scope)
        fdef = holder.fields.get(name) if isinstance(holder, (ObjectType, InterfaceType)) else None
        if fdef is None:
            if name.startswith("__"):
                self.fail(f"introspection field {name!r} is not supported", node)
            else:
                self.fail(f"unknown field {name!r} on type {scope}", node)
        return fdef

    def _build_nodes(self, entries: dict[str, list[tuple[Field, str]]], parent_type: str) -> list[SelectionNode]:
        nodes: list[SelectionNode] = []
        for key, items in entries.items():
            first, first_scope = items[0]
            if any(f.name != first.name for f, _ in items):
                self.fail(f"selections for key {key!r} resolve different fields", first)
                continue
            fdef = self._field_def(first_scope, first.name, first)
            if fdef is None:
                continue
            bad = False
            for other, other_scope in items[1:]:
                if self._field_def(other_scope, other.name, other) is None:
                    bad = True
            if bad:
                continue

            args = self._process_args(first, fdef)
            for other, _ in items[1:]:
                if self._process_args(other, fdef) != args:
                    self.fail(f"selections for key {key!r} have conflicting arguments", other)
                    bad = True
                    break
            if bad or args is None:
                continue

            base_name = fdef.type.named_type()
            base_type = self.doc.types.get(base_name)
            is_leaf = base_name in SCALARS or isinstance(base_type, EnumType)
            with_sset = [f for f, _ in items if f.selection_set is not None]
            if is_leaf and with_sset:
                self.fail(f"field {first.name!r} of type {fdef.type.render()} takes no selections", with_sset[0])
                continue
            if not is_leaf and len(with_sset) != len(items):
                missing = next(f for f, _ in items if f.selection_set is None)
                self.fail(f"field {first.name!r} of type {fdef.type.render()} requires a selection set", missing)
                continue

            origin = self.doc.origins.get((parent_type, first.name))
            if origin is None:
                self.fail(f"field {first.name!r} cannot be resolved on {parent_type}", first)
                continue

            node = SelectionNode(name=first.name, key=key, origin=origin)
            if not self._structure_args(node, args, origin, first):
                continue
            if not is_leaf:
                child_entries: dict[str, list[tuple[Field, str]]] = {}
                for f, _ in items:
                    self._collect(f.selection_set, base_name, base_name, frozenset(), child_entries)
                node.children = self._build_nodes(child_entries, base_name)
            nodes.append(node)
        return nodes

    def _process_args(self, node: Field, fdef: FieldDef) -> dict[str, Any] | None:
        known = {a.name: a for a in fdef.args}
        out: dict[str, Any] = {}
        seen: set[str] = set()
        failed = False
        for arg in node.arguments:
            if arg.name in seen:
                self.fail(f"duplicate argument {arg.name!r}", arg)
                failed = True
                continue
            seen.add(arg.name)
            adef = known.get(arg.name)
            if adef is None:
                self.fail(f"unknown argument {arg.name!r} on field {node.name!r}", arg)
                failed = True
                continue
            try:
                value = self._coerce(arg.value, adef.type, where=f"argument {arg.name!r}")
            except _CoercionError as err:
                self.fail(err.message, err if err.line else arg)
                failed = True
                continue
            if value is not _ABSENT:
                out[arg.name] = value
        for adef in fdef.args:
            if adef.name not in out and adef.type.kind == "non_null":
                self.fail(f"missing required argument {adef.name!r} on field {node.name!r}", node)
                failed = True
        return None if failed else out

    # -- argument structuring ----------------------------------------------------

    def _structure_args(self, node: SelectionNode, args: dict[str, Any],
                        origin: FieldOrigin, field_node: Field) -> bool:
        before = len(self.problems)
        kind = origin.kind
        if kind == "root_single":
            node.id_arg = args["id"]
        elif kind == "root_list":
            node.where = self._build_logic(args.get("where"), field_node, top=True)
            node.order_by = self._build_order(args.get("orderBy"), field_node)
            node.pagination = self._build_pagination(args.get("pagination"), field_node)
        elif kind == "adjacency":
            node.where_vertex = self._build_logic(args.get("whereVertex"), field_node, top=True)
            node.order_by_vertex = self._build_order(args.get("orderByVertex"), field_node)
            node.where_edge = self._build_logic(args.get("whereEdge"), field_node, top=True)
            node.order_by_edge = self._build_order(args.get("orderByEdge"), field_node)
            node.pagination = self._build_pagination(args.get("pagination"), field_node)
        elif kind in ("add_vertex", "update_vertex", "update_edge"):
            node.id_arg = args.get("id")
            node.data = self._build_data(args.get("data", {}))
        elif kind == "connect_edge":
            node.source_id = args[naming.connect_source_arg_name(origin.edge)]
            node.target_id = args[naming.connect_target_arg_name(origin.edge)]
            node.data = self._build_data(args.get("data", {}))
        elif kind in ("delete_vertex", "delete_edge"):
            node.id_arg = args["id"]
        return len(self.problems) == before

    def _build_logic(self, payload: dict[str, Any] | None, node: Field,
                     top: bool = False) -> LogicCondition | None:
        if payload is None:
            return None
        entries: list[LogicCondition] = []
        leaves: list[LogicCondition] = []
        for key, value in payload.items():
            if key in ("AND", "OR"):
                if value is None:
                    self.fail(f"{key} may not be null", node)
                    continue
                if not value:
                    self.fail(f"{key} must contain at least one condition", node)
                    continue
                children = []
                for item in value:
                    child = self._build_logic(item, node)
                    if child is None:
                        self.fail(f"{key} entries may not be empty objects", node)
                    else:
                        children.append(child)
                entries.append(LogicAnd(tuple(children)) if key == "AND" else LogicOr(tuple(children)))
            else:
                prop, _, op = key.rpartition("_")
                if value is None:
                    self.fail(f"filter {key} may not be null", node)
                    continue
                leaves.append(LogicLeaf(prop, op, value))
        ordered = leaves + entries
        if not ordered:
            return None
        return LogicAnd(tuple(ordered))

    def _build_order(self, payload: list[dict[str, Any]] | None, node: Field) -> OrderSpec | None:
        if payload is None:
            return None
        terms = []
        for item in payload:
            if item is None:
                self.fail("orderBy entries may not be null", node)
                continue
            terms.append(OrderTerm(item["property"], item["order"]))
        return OrderSpec(tuple(terms)) if terms else None

    def _build_pagination(self, payload: dict[str, Any] | None, node: Field) -> PaginationSpec | None:
        if payload is None:
            return None
        offset, limit = payload["offset"], payload["limit"]
        if offset < 0:
            self.fail("pagination offset must be non-negative", node)
            return None
        if limit < 0:
            self.fail("pagination limit must be non-negative", node)
            return None
        return PaginationSpec(offset, limit)

    def _build_data(self, payload: dict[str, Any]) -> dict[str, Any]:
        # explicit nulls on optional fields mean "leave unset"
        return {k: v for k, v in payload.items() if v is not None}


def expand(document: Document, doc: GraphQLSchemaDoc,
           variables: dict[str, Any] | None = None,
           operation_name: str | None = None) -> SelectionTree:
    """Validate a parsed request and expand it into a SelectionTree."""
    return _Expander(document, doc, variables, operation_name).run()


def validate_request(document: Document, doc: GraphQLSchemaDoc,
                     variables: dict[str, Any] | None = None,
                     operation_name: str | None = None) -> list[RequestProblem]:
    try:
        expand(document, doc, variables, operation_name)
    except RequestValidationError as err:
        return err.problems
    return []


# --- SDL soundness ------------------------------------------------------------


def check_sdl(text: str) -> list[str]:
    """Structural soundness of an SDL document; empty list means sound."""
    try:
        parsed = parse_sdl(text)
    except GraphQLSyntaxError as err:
        return [str(err)]

    errors: list[str] = []
    by_name: dict[str, Any] = {}
    for definition in parsed.definitions:
        if definition.name in by_name:
            errors.append(f"duplicate type name {definition.name!r}")
        by_name[definition.name] = definition

    def base_name(node: TypeNode) -> str:
        while isinstance(node, (ListTypeNode, NonNullTypeNode)):
            node = node.of
        return node.name

    def check_output_ref(node: TypeNode, where: str) -> None:
        name = base_name(node)
        if name in SCALARS:
            return
        target = by_name.get(name)
        if target is None:
            errors.append(f"{where}: unknown type {name!r}")
        elif isinstance(target, InputObjectTypeDefNode):
            errors.append(f"{where}: input type {name!r} used in output position")

    def check_input_ref(node: TypeNode, where: str) -> None:
        name = base_name(node)
        if name in SCALARS:
            return
        target = by_name.get(name)
        if target is None:
            errors.append(f"{where}: unknown type {name!r}")
        elif isinstance(target, (ObjectTypeDefNode, InterfaceTypeDefNode)):
            errors.append(f"{where}: output type {name!r} used in input position")

    object_defs = [d for d in parsed.definitions if isinstance(d, ObjectTypeDefNode)]
    for definition in parsed.definitions:
        if isinstance(definition, ObjectTypeDefNode):
            seen_fields = set()
            for f in definition.fields:
                where = f"{definition.name}.{f.name}"
                if f.name in seen_fields:
                    errors.append(f"duplicate field {where}")
                seen_fields.add(f.name)
                check_output_ref(f.type, where)
                seen_args = set()
                for arg in f.arguments:
                    if arg.name in seen_args:
                        errors.append(f"duplicate argument {where}({arg.name})")
                    seen_args.add(arg.name)
                    check_input_ref(arg.type, f"{where}({arg.name})")
            for iface in definition.interfaces:
                target = by_name.get(iface)
                if not isinstance(target, InterfaceTypeDefNode):
                    errors.append(f"{definition.name} implements unknown interface {iface!r}")
                    continue
                own = {f.name: f for f in definition.fields}
                for required in target.fields:
                    if required.name not in own:
                        errors.append(f"{definition.name} is missing interface field {required.name!r}")
                    elif _render_type_node(own[required.name].type) != _render_type_node(required.type):
                        errors.append(f"{definition.name}.{required.name} does not match interface type")
        elif isinstance(definition, InterfaceTypeDefNode):
            for f in definition.fields:
                check_output_ref(f.type, f"{definition.name}.{f.name}")
        elif isinstance(definition, InputObjectTypeDefNode):
            seen_fields = set()
            for f in definition.fields:
                if f.name in seen_fields:
                    errors.append(f"duplicate field {definition.name}.{f.name}")
                seen_fields.add(f.name)
                check_input_ref(f.type, f"{definition.name}.{f.name}")
        elif isinstance(definition, EnumTypeDefNode):
            if len(set(definition.values)) != len(definition.values):
                errors.append(f"duplicate enum value in {definition.name}")

    if object_defs and "Query" not in by_name:
        errors.append("schema defines object types but no Query type")
    for special in ("Query", "Mutation"):
        if special in by_name and not isinstance(by_name[special], ObjectTypeDefNode):
            errors.append(f"{special} must be an object type")
    return errors
