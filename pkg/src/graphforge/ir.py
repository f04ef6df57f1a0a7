"""Traversal intermediate representation and its two text flavors.

A compiled request is a flat sequence of steps; nested traversals
(projection bodies, filter branches) hold their own sequences. The
python flavor matches gremlinpython client syntax, the groovy flavor
matches the Gremlin console.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union

FLAVORS = ("python", "groovy")


@dataclass(frozen=True)
class Predicate:
    op: str  # eq neq gt gte lt lte
    value: Any


@dataclass(frozen=True)
class SourceV:
    id: str | None = None


@dataclass(frozen=True)
class SourceE:
    id: str


@dataclass(frozen=True)
class HasLabel:
    label: str


@dataclass(frozen=True)
class Has:
    key: str
    pred: Predicate


@dataclass(frozen=True)
class Where:
    inner: tuple["Step", ...]


@dataclass(frozen=True)
class AndStep:
    branches: tuple[tuple["Step", ...], ...]


@dataclass(frozen=True)
class OrStep:
    branches: tuple[tuple["Step", ...], ...]


@dataclass(frozen=True)
class Project:
    keys: tuple[str, ...]


@dataclass(frozen=True)
class By:
    inner: tuple["Step", ...]


@dataclass(frozen=True)
class Values:
    key: str


@dataclass(frozen=True)
class IdStep:
    pass


@dataclass(frozen=True)
class LabelStep:
    pass


@dataclass(frozen=True)
class Coalesce:
    branches: tuple[tuple["Step", ...], ...]


@dataclass(frozen=True)
class ConstantNull:
    pass


@dataclass(frozen=True)
class OutE:
    label: str


@dataclass(frozen=True)
class InE:
    label: str


@dataclass(frozen=True)
class InV:
    pass


@dataclass(frozen=True)
class OutV:
    pass


@dataclass(frozen=True)
class OrderTerm:
    direction: str  # asc | desc
    key: str | None = None
    inner: tuple["Step", ...] | None = None


@dataclass(frozen=True)
class OrderBy:
    terms: tuple[OrderTerm, ...]


@dataclass(frozen=True)
class Skip:
    count: int


@dataclass(frozen=True)
class Limit:
    count: int


@dataclass(frozen=True)
class Fold:
    pass


@dataclass(frozen=True)
class TerminalList:
    pass


@dataclass(frozen=True)
class TerminalNext:
    pass


@dataclass(frozen=True)
class TerminalIterate:
    pass


@dataclass(frozen=True)
class AddV:
    label: str


@dataclass(frozen=True)
class AddE:
    label: str


@dataclass(frozen=True)
class To:
    inner: tuple["Step", ...]


@dataclass(frozen=True)
class SetProperty:
    key: str
    value: Any


@dataclass(frozen=True)
class Drop:
    pass


Step = Union[
    SourceV, SourceE, HasLabel, Has, Where, AndStep, OrStep, Project, By,
    Values, IdStep, LabelStep, Coalesce, ConstantNull, OutE, InE, InV, OutV,
    OrderBy, Skip, Limit, Fold, TerminalList, TerminalNext, TerminalIterate,
    AddV, AddE, To, SetProperty, Drop,
]


# --- serialization -----------------------------------------------------------

_ESCAPES = {"\\": "\\\\", "'": "\\'", "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def _quote(text: str) -> str:
    return "'" + "".join(_ESCAPES.get(ch, ch) for ch in text) + "'"


def _literal(value: Any, flavor: str) -> str:
    if value is None:
        return "None" if flavor == "python" else "null"
    if isinstance(value, bool):
        if flavor == "python":
            return "True" if value else "False"
        return "true" if value else "false"
    if isinstance(value, str):
        return _quote(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _predicate(pred: Predicate, flavor: str) -> str:
    body = f"{pred.op}({_literal(pred.value, flavor)})"
    return f"P.{body}" if flavor == "python" else body


def _direction(direction: str, flavor: str) -> str:
    return f"Order.{direction}" if flavor == "python" else direction


def _anonymous(steps: tuple[Step, ...], flavor: str) -> str:
    chain = "".join(_render(s, flavor) for s in steps)
    if flavor == "python":
        return "__" + chain
    return chain[1:]  # drop the leading dot


_PY_NAMES = {
    "hasLabel": "has_label", "outE": "out_e", "inE": "in_e", "inV": "in_v",
    "outV": "out_v", "id": "id_", "toList": "to_list", "addV": "add_v",
    "addE": "add_e", "and": "and_", "or": "or_",
}


def _method(name: str, flavor: str) -> str:
    return _PY_NAMES.get(name, name) if flavor == "python" else name


def _render(step: Step, flavor: str) -> str:
    m = lambda name: _method(name, flavor)
    if isinstance(step, SourceV):
        return f".V({_quote(step.id)})" if step.id is not None else ".V()"
    if isinstance(step, SourceE):
        return f".E({_quote(step.id)})"
    if isinstance(step, HasLabel):
        return f".{m('hasLabel')}({_quote(step.label)})"
    if isinstance(step, Has):
        return f".has({_quote(step.key)}, {_predicate(step.pred, flavor)})"
    if isinstance(step, Where):
        return f".where({_anonymous(step.inner, flavor)})"
    if isinstance(step, AndStep):
        parts = ", ".join(_anonymous(b, flavor) for b in step.branches)
        return f".{m('and')}({parts})"
    if isinstance(step, OrStep):
        parts = ", ".join(_anonymous(b, flavor) for b in step.branches)
        return f".{m('or')}({parts})"
    if isinstance(step, Project):
        return f".project({', '.join(_quote(k) for k in step.keys)})"
    if isinstance(step, By):
        return f".by({_anonymous(step.inner, flavor)})"
    if isinstance(step, Values):
        return f".values({_quote(step.key)})"
    if isinstance(step, IdStep):
        return f".{m('id')}()"
    if isinstance(step, LabelStep):
        return ".label()"
    if isinstance(step, Coalesce):
        parts = ", ".join(_anonymous(b, flavor) for b in step.branches)
        return f".coalesce({parts})"
    if isinstance(step, ConstantNull):
        return f".constant({_literal(None, flavor)})"
    if isinstance(step, OutE):
        return f".{m('outE')}({_quote(step.label)})"
    if isinstance(step, InE):
        return f".{m('inE')}({_quote(step.label)})"
    if isinstance(step, InV):
        return f".{m('inV')}()"
    if isinstance(step, OutV):
        return f".{m('outV')}()"
    if isinstance(step, OrderBy):
        out = ".order()"
        for term in step.terms:
            target = _quote(term.key) if term.key is not None else _anonymous(term.inner, flavor)
            out += f".by({target}, {_direction(term.direction, flavor)})"
        return out
    if isinstance(step, Skip):
        return f".skip({step.count})"
    if isinstance(step, Limit):
        return f".limit({step.count})"
    if isinstance(step, Fold):
        return ".fold()"
    if isinstance(step, TerminalList):
        return f".{m('toList')}()"
    if isinstance(step, TerminalNext):
        return ".next()"
    if isinstance(step, TerminalIterate):
        return ".iterate()"
    if isinstance(step, AddV):
        return f".{m('addV')}({_quote(step.label)})"
    if isinstance(step, AddE):
        return f".{m('addE')}({_quote(step.label)})"
    if isinstance(step, To):
        return f".to({_anonymous(step.inner, flavor)})"
    if isinstance(step, SetProperty):
        return f".property({_quote(step.key)}, {_literal(step.value, flavor)})"
    if isinstance(step, Drop):
        return ".drop()"
    raise TypeError(f"unknown step {step!r}")


def serialize(steps: list[Step] | tuple[Step, ...], flavor: str = "python") -> str:
    """Render a full traversal rooted at the graph source."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    return "g" + "".join(_render(s, flavor) for s in steps)
