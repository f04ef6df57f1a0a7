"""Recursive-descent parsers for executable documents and the SDL subset."""

from __future__ import annotations

from .ast import (
    Argument,
    BooleanValue,
    Directive,
    Document,
    EnumTypeDefNode,
    EnumValue,
    Field,
    FieldDefNode,
    FloatValue,
    FragmentDefinition,
    FragmentSpread,
    InlineFragment,
    InputObjectTypeDefNode,
    InputValueDefNode,
    InterfaceTypeDefNode,
    IntValue,
    ListTypeNode,
    ListValue,
    NamedTypeNode,
    NonNullTypeNode,
    NullValue,
    ObjectField,
    ObjectTypeDefNode,
    ObjectValue,
    OperationDefinition,
    SDLDocument,
    SelectionSet,
    StringValue,
    TypeNode,
    ValueNode,
    Variable,
    VariableDefinition,
)
from .lexer import GraphQLSyntaxError, Token, tokenize

_SDL_KEYWORDS = {"type", "interface", "input", "enum", "schema", "scalar", "union", "directive", "extend"}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, token: Token | None = None) -> GraphQLSyntaxError:
        token = token or self.tok
        return GraphQLSyntaxError(message, token.line, token.column)

    def advance(self) -> Token:
        token = self.tok
        if token.kind != "eof":
            self.i += 1
        return token

    def at_punct(self, value: str) -> bool:
        return self.tok.kind == "punct" and self.tok.value == value

    def at_name(self, value: str | None = None) -> bool:
        return self.tok.kind == "name" and (value is None or self.tok.value == value)

    def expect_punct(self, value: str) -> Token:
        if not self.at_punct(value):
            raise self.error(f"expected {value!r}, found {self.tok.value!r} ({self.tok.kind})")
        return self.advance()

    def expect_name(self, value: str | None = None) -> Token:
        if not self.at_name(value):
            expected = f"name {value!r}" if value else "a name"
            raise self.error(f"expected {expected}, found {self.tok.value!r} ({self.tok.kind})")
        return self.advance()

    # --- shared pieces -------------------------------------------------------

    def parse_type(self) -> TypeNode:
        if self.at_punct("["):
            self.advance()
            inner = self.parse_type()
            self.expect_punct("]")
            node: TypeNode = ListTypeNode(inner)
        else:
            node = NamedTypeNode(self.expect_name().value)
        if self.at_punct("!"):
            self.advance()
            node = NonNullTypeNode(node)
        return node

    def parse_value(self, const: bool) -> ValueNode:
        token = self.tok
        if token.kind == "punct":
            if token.value == "$":
                if const:
                    raise self.error("variables are not allowed here")
                self.advance()
                name = self.expect_name()
                return Variable(name.value, name.line, name.column)
            if token.value == "[":
                self.advance()
                items = []
                while not self.at_punct("]"):
                    items.append(self.parse_value(const))
                self.advance()
                return ListValue(tuple(items))
            if token.value == "{":
                self.advance()
                fields = []
                seen = set()
                while not self.at_punct("}"):
                    name = self.expect_name().value
                    if name in seen:
                        raise self.error(f"duplicate key {name!r} in input object")
                    seen.add(name)
                    self.expect_punct(":")
                    fields.append(ObjectField(name, self.parse_value(const)))
                self.advance()
                return ObjectValue(tuple(fields))
            raise self.error(f"unexpected {token.value!r}")
        if token.kind == "int":
            self.advance()
            return IntValue(int(token.value))
        if token.kind == "float":
            self.advance()
            return FloatValue(float(token.value))
        if token.kind == "string":
            self.advance()
            return StringValue(token.value)
        if token.kind == "name":
            self.advance()
            if token.value == "true":
                return BooleanValue(True)
            if token.value == "false":
                return BooleanValue(False)
            if token.value == "null":
                return NullValue()
            return EnumValue(token.value)
        raise self.error("expected a value")

    def parse_arguments(self, const: bool) -> list[Argument]:
        if not self.at_punct("("):
            return []
        self.advance()
        args: list[Argument] = []
        while not self.at_punct(")"):
            name = self.expect_name()
            self.expect_punct(":")
            args.append(Argument(name.value, self.parse_value(const), name.line, name.column))
        self.advance()
        if not args:
            raise self.error("empty argument list")
        return args

    def parse_directives(self, const: bool) -> list[Directive]:
        directives = []
        while self.at_punct("@"):
            self.advance()
            name = self.expect_name()
            directives.append(Directive(name.value, self.parse_arguments(const), name.line, name.column))
        return directives


def _parse_selection_set(p: _Parser) -> SelectionSet:
    open_tok = p.expect_punct("{")
    selections = []
    while not p.at_punct("}"):
        selections.append(_parse_selection(p))
    p.advance()
    if not selections:
        raise p.error("selection set may not be empty", open_tok)
    return SelectionSet(selections, open_tok.line, open_tok.column)


def _parse_selection(p: _Parser):
    if p.at_punct("..."):
        spread = p.advance()
        if p.at_name() and p.tok.value != "on":
            name = p.advance()
            return FragmentSpread(name.value, p.parse_directives(False), spread.line, spread.column)
        condition = None
        if p.at_name("on"):
            p.advance()
            condition = p.expect_name().value
        directives = p.parse_directives(False)
        return InlineFragment(condition, directives, _parse_selection_set(p), spread.line, spread.column)
    first = p.expect_name()
    alias = None
    name = first
    if p.at_punct(":"):
        p.advance()
        alias = first
        name = p.expect_name()
    arguments = p.parse_arguments(False)
    directives = p.parse_directives(False)
    selection_set = _parse_selection_set(p) if p.at_punct("{") else None
    return Field(name.value, alias.value if alias else None, arguments, directives,
                 selection_set, first.line, first.column)


def _parse_variable_definitions(p: _Parser) -> list[VariableDefinition]:
    if not p.at_punct("("):
        return []
    p.advance()
    out: list[VariableDefinition] = []
    while not p.at_punct(")"):
        dollar = p.expect_punct("$")
        name = p.expect_name().value
        p.expect_punct(":")
        var_type = p.parse_type()
        default = None
        if p.at_punct("="):
            p.advance()
            default = p.parse_value(const=True)
        out.append(VariableDefinition(name, var_type, default, dollar.line, dollar.column))
    p.advance()
    if not out:
        raise p.error("empty variable definition list")
    return out


def parse_document(text: str) -> Document:
    """Parse an executable GraphQL document (operations and fragments)."""
    p = _Parser(text)
    definitions = []
    while p.tok.kind != "eof":
        if p.at_punct("{"):
            sset = _parse_selection_set(p)
            definitions.append(OperationDefinition("query", None, [], [], sset, sset.line, sset.column))
        elif p.at_name("query") or p.at_name("mutation"):
            keyword = p.advance()
            name = p.advance().value if p.at_name() else None
            variable_definitions = _parse_variable_definitions(p)
            directives = p.parse_directives(False)
            sset = _parse_selection_set(p)
            definitions.append(OperationDefinition(keyword.value, name, variable_definitions,
                                                   directives, sset, keyword.line, keyword.column))
        elif p.at_name("subscription"):
            raise p.error("subscription operations are not supported")
        elif p.at_name("fragment"):
            keyword = p.advance()
            name = p.expect_name().value
            if name == "on":
                raise p.error("fragment may not be named 'on'")
            p.expect_name("on")
            condition = p.expect_name().value
            directives = p.parse_directives(False)
            sset = _parse_selection_set(p)
            definitions.append(FragmentDefinition(name, condition, directives, sset,
                                                  keyword.line, keyword.column))
        elif p.at_name() and p.tok.value in _SDL_KEYWORDS:
            raise p.error("type system definitions are not allowed in an executable document")
        else:
            raise p.error(f"unexpected {p.tok.value!r}")
    if not definitions:
        raise p.error("document contains no definitions")
    return Document(definitions)


def _parse_field_defs(p: _Parser) -> list[FieldDefNode]:
    p.expect_punct("{")
    fields = []
    while not p.at_punct("}"):
        if p.tok.kind == "string":
            p.advance()  # description, ignored
        name = p.expect_name().value
        arguments = _parse_input_value_defs(p) if p.at_punct("(") else []
        p.expect_punct(":")
        fields.append(FieldDefNode(name, arguments, p.parse_type()))
    p.advance()
    if not fields:
        raise p.error("type must declare at least one field")
    return fields


def _parse_input_value_defs(p: _Parser, closing: str = ")") -> list[InputValueDefNode]:
    p.advance()  # caller checked the opener
    out = []
    while not p.at_punct(closing):
        if p.tok.kind == "string":
            p.advance()
        name = p.expect_name().value
        p.expect_punct(":")
        value_type = p.parse_type()
        default = None
        if p.at_punct("="):
            p.advance()
            default = p.parse_value(const=True)
        out.append(InputValueDefNode(name, value_type, default))
    p.advance()
    if not out:
        raise p.error("empty definition list")
    return out


def parse_sdl(text: str) -> SDLDocument:
    """Parse the SDL subset: object, interface, input, and enum definitions."""
    p = _Parser(text)
    definitions: list = []
    while p.tok.kind != "eof":
        if p.tok.kind == "string":
            p.advance()  # description, ignored
            continue
        if p.at_name("type"):
            p.advance()
            name = p.expect_name().value
            interfaces = []
            if p.at_name("implements"):
                p.advance()
                interfaces.append(p.expect_name().value)
                while p.at_punct("&"):
                    p.advance()
                    interfaces.append(p.expect_name().value)
            definitions.append(ObjectTypeDefNode(name, interfaces, _parse_field_defs(p)))
        elif p.at_name("interface"):
            p.advance()
            definitions.append(InterfaceTypeDefNode(p.expect_name().value, _parse_field_defs(p)))
        elif p.at_name("input"):
            p.advance()
            name = p.expect_name().value
            if not p.at_punct("{"):
                raise p.error("expected '{'")
            definitions.append(InputObjectTypeDefNode(name, _parse_input_value_defs(p, closing="}")))
        elif p.at_name("enum"):
            p.advance()
            name = p.expect_name().value
            p.expect_punct("{")
            values = []
            while not p.at_punct("}"):
                values.append(p.expect_name().value)
            p.advance()
            if not values:
                raise p.error("enum must declare at least one value")
            definitions.append(EnumTypeDefNode(name, values))
        elif p.at_name() and p.tok.value in ("query", "mutation", "subscription", "fragment"):
            raise p.error("executable definitions are not allowed in SDL")
        elif p.at_name() and p.tok.value in _SDL_KEYWORDS:
            raise p.error(f"{p.tok.value} definitions are not supported")
        else:
            raise p.error(f"unexpected {p.tok.value!r}")
    return SDLDocument(definitions)
