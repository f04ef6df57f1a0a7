"""AST node types for GraphQL documents and the SDL subset."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

# --- value literals ---------------------------------------------------------


@dataclass(frozen=True)
class Variable:
    name: str
    line: int = 0
    column: int = 0


@dataclass(frozen=True)
class IntValue:
    value: int


@dataclass(frozen=True)
class FloatValue:
    value: float


@dataclass(frozen=True)
class StringValue:
    value: str


@dataclass(frozen=True)
class BooleanValue:
    value: bool


@dataclass(frozen=True)
class NullValue:
    pass


@dataclass(frozen=True)
class EnumValue:
    name: str


@dataclass(frozen=True)
class ListValue:
    items: tuple[ValueNode, ...]


@dataclass(frozen=True)
class ObjectField:
    name: str
    value: ValueNode


@dataclass(frozen=True)
class ObjectValue:
    fields: tuple[ObjectField, ...]


ValueNode = Union[Variable, IntValue, FloatValue, StringValue, BooleanValue,
                  NullValue, EnumValue, ListValue, ObjectValue]

# --- type references --------------------------------------------------------


@dataclass(frozen=True)
class NamedTypeNode:
    name: str


@dataclass(frozen=True)
class ListTypeNode:
    of: TypeNode


@dataclass(frozen=True)
class NonNullTypeNode:
    of: TypeNode


TypeNode = Union[NamedTypeNode, ListTypeNode, NonNullTypeNode]

# --- executable documents ---------------------------------------------------


@dataclass
class Argument:
    name: str
    value: ValueNode
    line: int = 0
    column: int = 0


@dataclass
class Directive:
    name: str
    arguments: list[Argument]
    line: int = 0
    column: int = 0


@dataclass
class Field:
    name: str
    alias: str | None = None
    arguments: list[Argument] = field(default_factory=list)
    directives: list[Directive] = field(default_factory=list)
    selection_set: SelectionSet | None = None
    line: int = 0
    column: int = 0

    @property
    def response_key(self) -> str:
        return self.alias or self.name


@dataclass
class FragmentSpread:
    name: str
    directives: list[Directive] = field(default_factory=list)
    line: int = 0
    column: int = 0


@dataclass
class InlineFragment:
    type_condition: str | None
    directives: list[Directive]
    selection_set: SelectionSet
    line: int = 0
    column: int = 0


Selection = Union[Field, FragmentSpread, InlineFragment]


@dataclass
class SelectionSet:
    selections: list[Selection]
    line: int = 0
    column: int = 0


@dataclass
class VariableDefinition:
    name: str
    type: TypeNode
    default: ValueNode | None = None
    line: int = 0
    column: int = 0


@dataclass
class OperationDefinition:
    operation: str  # "query" | "mutation"
    name: str | None
    variable_definitions: list[VariableDefinition]
    directives: list[Directive]
    selection_set: SelectionSet
    line: int = 0
    column: int = 0


@dataclass
class FragmentDefinition:
    name: str
    type_condition: str
    directives: list[Directive]
    selection_set: SelectionSet
    line: int = 0
    column: int = 0


@dataclass
class Document:
    definitions: list[Union[OperationDefinition, FragmentDefinition]]

    def operations(self) -> list[OperationDefinition]:
        return [d for d in self.definitions if isinstance(d, OperationDefinition)]

    def fragments(self) -> dict[str, FragmentDefinition]:
        return {d.name: d for d in self.definitions if isinstance(d, FragmentDefinition)}

# --- SDL subset --------------------------------------------------------------


@dataclass
class InputValueDefNode:
    name: str
    type: TypeNode
    default: ValueNode | None = None


@dataclass
class FieldDefNode:
    name: str
    arguments: list[InputValueDefNode]
    type: TypeNode


@dataclass
class ObjectTypeDefNode:
    name: str
    interfaces: list[str]
    fields: list[FieldDefNode]


@dataclass
class InterfaceTypeDefNode:
    name: str
    fields: list[FieldDefNode]


@dataclass
class InputObjectTypeDefNode:
    name: str
    fields: list[InputValueDefNode]


@dataclass
class EnumTypeDefNode:
    name: str
    values: list[str]


TypeSystemDefNode = Union[ObjectTypeDefNode, InterfaceTypeDefNode,
                          InputObjectTypeDefNode, EnumTypeDefNode]


@dataclass
class SDLDocument:
    definitions: list[TypeSystemDefNode]

    def by_name(self) -> dict[str, TypeSystemDefNode]:
        return {d.name: d for d in self.definitions}
