"""Compilation of selection trees into single traversals.

Walks the expanded request once, emitting steps per node, so the
traversal size stays proportional to the request size. Each node
contributes its steps exactly one time; a visit counter recorded
during compilation makes that property checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .frontend import (
    LogicAnd,
    LogicCondition,
    LogicLeaf,
    LogicOr,
    OrderSpec,
    SelectionNode,
    SelectionTree,
    expand,
    parse_request,
)
from .ir import (
    AddE,
    AddV,
    AndStep,
    By,
    Coalesce,
    ConstantNull,
    Drop,
    Fold,
    Has,
    HasLabel,
    IdStep,
    InE,
    InV,
    LabelStep,
    Limit,
    OrderBy,
    OrderTerm,
    OrStep,
    OutE,
    OutV,
    Predicate,
    Project,
    SetProperty,
    Skip,
    SourceE,
    SourceV,
    Step,
    TerminalIterate,
    TerminalList,
    TerminalNext,
    To,
    Values,
    Where,
)
from .synth import GraphQLSchemaDoc


@dataclass(frozen=True)
class ComplexityCounters:
    s: int
    w: int
    k: int
    d: int
    field_visits: int


@dataclass
class TranspileResult:
    steps: tuple[Step, ...]
    counters: ComplexityCounters


def compile_where(cond: LogicCondition | None) -> list[Step]:
    """Flatten a logic condition into filter steps at the current position."""
    if cond is None:
        return []
    steps: list[Step] = []
    assert isinstance(cond, LogicAnd)
    for child in cond.children:
        if isinstance(child, LogicLeaf):
            steps.append(Has(child.property, Predicate(child.op.lower(), child.value)))
        elif isinstance(child, LogicAnd):
            steps.append(AndStep(tuple(tuple(compile_where(c)) for c in child.children)))
        else:
            steps.append(OrStep(tuple(tuple(compile_where(c)) for c in child.children)))
    return steps


class _Compiler:
    def __init__(self) -> None:
        self.visits = 0

    # -- projections -----------------------------------------------------------

    def project_vertex(self, node: SelectionNode) -> list[Step]:
        """Project the selected fields of a vertex-positioned traverser."""
        steps: list[Step] = [Project(tuple(c.key for c in node.children))]
        for child in node.children:
            self.visits += 1
            steps.append(By(tuple(self.vertex_field(child))))
        return steps

    def vertex_field(self, child: SelectionNode) -> list[Step]:
        kind = child.origin.kind
        if kind == "id":
            return [IdStep()]
        if kind == "label":
            return [LabelStep()]
        if kind == "property":
            return self.property_body(child)
        if kind == "adjacency":
            return self.adjacency(child)
        raise AssertionError(f"unexpected vertex field kind {kind}")

    def property_body(self, child: SelectionNode) -> list[Step]:
        prop = child.origin.prop
        if prop.required:
            return [Values(prop.key)]
        return [Coalesce(((Values(prop.key),), (ConstantNull(),)))]

    def adjacency(self, node: SelectionNode) -> list[Step]:
        origin = node.origin
        direction = origin.direction
        steps: list[Step] = [OutE(origin.edge.label) if direction == "out" else InE(origin.edge.label)]
        steps.extend(compile_where(node.where_edge))
        if node.where_vertex is not None:
            hop = InV() if direction == "out" else OutV()
            inner = [hop, HasLabel(origin.far.label)] + compile_where(node.where_vertex)
            steps.append(Where(tuple(inner)))
        terms = self.order_terms(node, direction)
        if terms:
            steps.append(OrderBy(tuple(terms)))
        steps.extend(self.project_edge(node, direction))
        if node.pagination is not None:
            steps.append(Skip(node.pagination.offset))
            steps.append(Limit(node.pagination.limit))
        steps.append(Fold())
        return steps

    def order_terms(self, node: SelectionNode, direction: str) -> list[OrderTerm]:
        terms: list[OrderTerm] = []
        if node.order_by_edge is not None:
            for t in node.order_by_edge.terms:
                terms.append(OrderTerm(t.direction.lower(), key=t.property))
        if node.order_by_vertex is not None:
            hop = InV() if direction == "out" else OutV()
            for t in node.order_by_vertex.terms:
                terms.append(OrderTerm(t.direction.lower(), inner=(hop, Values(t.property))))
        return terms

    def project_edge(self, node: SelectionNode, direction: str) -> list[Step]:
        steps: list[Step] = [Project(tuple(c.key for c in node.children))]
        for child in node.children:
            self.visits += 1
            kind = child.origin.kind
            if kind == "id":
                steps.append(By((IdStep(),)))
            elif kind == "label":
                steps.append(By((LabelStep(),)))
            elif kind == "property":
                steps.append(By(tuple(self.property_body(child))))
            elif kind == "vertex_ref":
                hop = InV() if direction == "out" else OutV()
                body = [hop, HasLabel(child.origin.far.label)] + self.project_vertex(child)
                steps.append(By(tuple(body)))
            else:
                raise AssertionError(f"unexpected edge field kind {kind}")
        return steps

    # -- roots -------------------------------------------------------------------

    def query_root(self, node: SelectionNode) -> list[Step]:
        origin = node.origin
        if origin.kind == "root_single":
            steps: list[Step] = [SourceV(node.id_arg), HasLabel(origin.vertex.label)]
            steps.extend(self.project_vertex(node))
            steps.append(TerminalNext())
            return steps
        steps = [SourceV(), HasLabel(origin.vertex.label)]
        steps.extend(compile_where(node.where))
        if node.order_by is not None:
            terms = [OrderTerm(t.direction.lower(), key=t.property) for t in node.order_by.terms]
            steps.append(OrderBy(tuple(terms)))
        steps.extend(self.project_vertex(node))
        if node.pagination is not None:
            steps.append(Skip(node.pagination.offset))
            steps.append(Limit(node.pagination.limit))
        steps.append(TerminalList())
        return steps

    def mutation_root(self, node: SelectionNode) -> list[Step]:
        origin = node.origin
        kind = origin.kind
        if kind == "add_vertex":
            steps: list[Step] = [AddV(origin.vertex.label)]
            steps.extend(self.set_properties(node.data, origin.vertex.properties))
        elif kind == "update_vertex":
            steps = [SourceV(node.id_arg), HasLabel(origin.vertex.label)]
            steps.extend(self.set_properties(node.data, origin.vertex.properties))
        elif kind == "connect_edge":
            edge = origin.edge
            steps = [
                SourceV(node.source_id),
                HasLabel(edge.source.label),
                AddE(edge.label),
                To((SourceV(node.target_id), HasLabel(edge.target.label))),
            ]
            steps.extend(self.set_properties(node.data, edge.properties))
        elif kind == "update_edge":
            steps = [SourceE(node.id_arg), HasLabel(origin.edge.label)]
            steps.extend(self.set_properties(node.data, origin.edge.properties))
        elif kind == "delete_vertex":
            return [SourceV(node.id_arg), Drop(), TerminalIterate()]
        elif kind == "delete_edge":
            return [SourceE(node.id_arg), Drop(), TerminalIterate()]
        else:
            raise AssertionError(f"unexpected mutation kind {kind}")
        steps.append(IdStep())
        steps.append(TerminalNext())
        return steps

    def set_properties(self, data: dict[str, Any], properties) -> list[Step]:
        # declaration order, not authoring order, keeps output stable
        return [SetProperty(p.key, data[p.key]) for p in properties if p.key in data]


def compile_tree(tree: SelectionTree) -> TranspileResult:
    compiler = _Compiler()
    if tree.operation == "mutation":
        steps = compiler.mutation_root(tree.root)
    else:
        steps = compiler.query_root(tree.root)
    counters = ComplexityCounters(tree.s, tree.w, tree.k, tree.d, compiler.visits)
    return TranspileResult(tuple(steps), counters)


def transpile_request(text: str, doc: GraphQLSchemaDoc,
                      variables: dict[str, Any] | None = None,
                      operation_name: str | None = None) -> TranspileResult:
    """Parse, validate, expand, and compile a request in one call."""
    tree = expand(parse_request(text), doc, variables, operation_name)
    return compile_tree(tree)
