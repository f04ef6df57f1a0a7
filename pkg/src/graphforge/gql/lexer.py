"""GraphQL lexical analysis.

Commas and line terminators are insignificant, comments run to end of line,
and every token carries its source position for error reporting.
"""

from __future__ import annotations

from dataclasses import dataclass


class GraphQLSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at {line}:{column}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str  # name | int | float | string | punct | eof
    value: str
    line: int
    column: int


_PUNCT_SINGLE = set("!$():=@[]{}|&")


def _is_name_start(ch: str) -> bool:
    return ch == "_" or ch.isascii() and ch.isalpha()


def _is_name_char(ch: str) -> bool:
    return ch == "_" or ch.isascii() and (ch.isalpha() or ch.isdigit())


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str) -> GraphQLSyntaxError:
        return GraphQLSyntaxError(message, self.line, self.col)

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def advance(self, count: int = 1) -> None:
        for _ in range(count):
            if self.pos < len(self.text):
                if self.text[self.pos] == "\n":
                    self.line += 1
                    self.col = 1
                else:
                    self.col += 1
                self.pos += 1


def tokenize(text: str) -> list[Token]:
    sc = _Scanner(text)
    tokens: list[Token] = []
    while True:
        _skip_ignored(sc)
        if sc.pos >= len(sc.text):
            tokens.append(Token("eof", "", sc.line, sc.col))
            return tokens
        ch = sc.peek()
        line, col = sc.line, sc.col
        if _is_name_start(ch):
            start = sc.pos
            while sc.pos < len(sc.text) and _is_name_char(sc.peek()):
                sc.advance()
            tokens.append(Token("name", sc.text[start:sc.pos], line, col))
        elif ch == "." :
            if sc.peek(1) == "." and sc.peek(2) == ".":
                sc.advance(3)
                tokens.append(Token("punct", "...", line, col))
            else:
                raise sc.error("unexpected '.'")
        elif ch in _PUNCT_SINGLE:
            sc.advance()
            tokens.append(Token("punct", ch, line, col))
        elif ch == '"':
            tokens.append(_read_string(sc, line, col))
        elif ch == "-" or ch.isdigit():
            tokens.append(_read_number(sc, line, col))
        else:
            raise sc.error(f"unexpected character {ch!r}")


def _skip_ignored(sc: _Scanner) -> None:
    while sc.pos < len(sc.text):
        ch = sc.peek()
        if ch in " \t\r\n,﻿":
            sc.advance()
        elif ch == "#":
            while sc.pos < len(sc.text) and sc.peek() != "\n":
                sc.advance()
        else:
            return


def _read_number(sc: _Scanner, line: int, col: int) -> Token:
    start = sc.pos
    if sc.peek() == "-":
        sc.advance()
    if not sc.peek().isdigit():
        raise sc.error("expected digit")
    if sc.peek() == "0" and sc.peek(1).isdigit():
        raise sc.error("numbers may not have leading zeros")
    while sc.peek().isdigit():
        sc.advance()
    is_float = False
    if sc.peek() == "." and sc.peek(1).isdigit():
        is_float = True
        sc.advance()
        while sc.peek().isdigit():
            sc.advance()
    if sc.peek() in "eE":
        probe = 1
        if sc.peek(1) in "+-":
            probe = 2
        if sc.peek(probe).isdigit():
            is_float = True
            sc.advance(probe)
            while sc.peek().isdigit():
                sc.advance()
        else:
            raise sc.error("malformed float exponent")
    nxt = sc.peek()
    if nxt and (_is_name_char(nxt) or nxt == "."):
        raise sc.error(f"number followed by invalid character {nxt!r}")
    return Token("float" if is_float else "int", sc.text[start:sc.pos], line, col)


_ESCAPES = {'"': '"', "\\": "\\", "/": "/", "b": "\b", "f": "\f", "n": "\n", "r": "\r", "t": "\t"}


def _read_string(sc: _Scanner, line: int, col: int) -> Token:
    if sc.peek(1) == '"' and sc.peek(2) == '"':
        return _read_block_string(sc, line, col)
    sc.advance()
    out: list[str] = []
    while True:
        ch = sc.peek()
        if ch == "":
            raise sc.error("unterminated string")
        if ch == "\n" or ch == "\r":
            raise sc.error("newline in string literal")
        if ch == '"':
            sc.advance()
            return Token("string", "".join(out), line, col)
        if ch == "\\":
            esc = sc.peek(1)
            if esc == "u":
                hex_digits = sc.text[sc.pos + 2:sc.pos + 6]
                if len(hex_digits) != 4 or any(c not in "0123456789abcdefABCDEF" for c in hex_digits):
                    raise sc.error("malformed unicode escape")
                out.append(chr(int(hex_digits, 16)))
                sc.advance(6)
            elif esc in _ESCAPES:
                out.append(_ESCAPES[esc])
                sc.advance(2)
            else:
                raise sc.error(f"invalid escape \\{esc}")
        else:
            out.append(ch)
            sc.advance()


def _read_block_string(sc: _Scanner, line: int, col: int) -> Token:
    sc.advance(3)
    raw: list[str] = []
    while True:
        ch = sc.peek()
        if ch == "":
            raise sc.error("unterminated block string")
        if ch == '"' and sc.peek(1) == '"' and sc.peek(2) == '"':
            sc.advance(3)
            return Token("string", _dedent_block("".join(raw)), line, col)
        if ch == "\\" and sc.peek(1) == '"' and sc.peek(2) == '"' and sc.peek(3) == '"':
            raw.append('"""')
            sc.advance(4)
        else:
            raw.append(ch)
            sc.advance()


def _dedent_block(raw: str) -> str:
    lines = raw.split("\n")
    indent: int | None = None
    for entry in lines[1:]:
        stripped = len(entry) - len(entry.lstrip(" \t"))
        if stripped < len(entry):
            indent = stripped if indent is None else min(indent, stripped)
    if indent:
        lines = [lines[0]] + [entry[indent:] for entry in lines[1:]]
    while lines and not lines[0].strip():
        lines.pop(0)
    while lines and not lines[-1].strip():
        lines.pop()
    return "\n".join(lines)
