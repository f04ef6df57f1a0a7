"""Schema validation rules V1 through V12.

validate() is pure and reports every violated rule without short-circuiting,
in a stable order: vertices in schema order, then edges in schema order, and
rule number within one element. V12 additionally covers synthesized-name
collisions; that sweep only runs once V1-V11 are clean so every violation
points at its root cause rather than a downstream symptom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import naming
from .schema import EdgeDef, GraphSchema, VertexDef

IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Violation:
    rule: str
    subject: str
    message: str


def _check_label(rule_list: list[Violation], subject: str, label: str) -> None:
    if not IDENTIFIER_RE.match(label):
        rule_list.append(Violation("V1", subject, f"label {label!r} must start with a letter or underscore and contain only letters, digits, and underscores"))
    if label.startswith("__"):
        rule_list.append(Violation("V2", subject, f"label {label!r} must not start with two underscores"))


def _check_properties(rule_list: list[Violation], subject: str, element: VertexDef | EdgeDef) -> None:
    seen: set[str] = set()
    for prop in element.properties:
        psubject = f"{subject}.property[{prop.key}]"
        if not IDENTIFIER_RE.match(prop.key):
            rule_list.append(Violation("V3", psubject, f"property key {prop.key!r} must start with a letter or underscore and contain only letters, digits, and underscores"))
        if prop.key in ("id", "label") or prop.key.startswith("__"):
            rule_list.append(Violation("V4", psubject, f"property key {prop.key!r} is reserved"))
        if prop.key in seen:
            rule_list.append(Violation("V5", psubject, f"property key {prop.key!r} appears more than once on this element"))
        seen.add(prop.key)


def _reserved_label(rule_list: list[Violation], subject: str, label: str) -> None:
    if label in naming.RESERVED_LABELS:
        rule_list.append(Violation("V12", subject, f"label {label!r} is reserved for generated schema types"))


def _inventory_sweep(schema: GraphSchema) -> list[Violation]:
    """Detect duplicate synthesized names coming from distinct schema elements."""
    first_origin: dict[tuple[str, str], str] = {}
    reported: set[tuple[str, str]] = set()
    found: list[Violation] = []
    for scope, name, origin in naming.synthesized_name_inventory(schema):
        key = (scope, name)
        prior = first_origin.get(key)
        if prior is None:
            first_origin[key] = origin
        elif prior != origin and key not in reported:
            reported.add(key)
            found.append(Violation("V12", _origin_subject(origin),
                                   f"synthesized name {name!r} ({scope}) collides with the one generated by {_origin_subject(prior)}"))
    return found


def _origin_subject(origin: str) -> str:
    kind, _, rest = origin.partition(":")
    if kind == "vertex":
        return f"vertex[{rest}]"
    if kind == "edge":
        return f"edge[{rest.split(':')[0]}]"
    if kind == "property":
        element, _, key = rest.partition(".")
        return f"element[{element}].property[{key}]"
    if kind == "vertexref":
        return f"vertex[{rest}]"
    return origin


def validate(schema: GraphSchema) -> list[Violation]:
    violations: list[Violation] = []

    seen_vertex_labels: set[str] = set()
    for v in schema.vertices:
        subject = f"vertex[{v.id}]"
        _check_label(violations, subject, v.label)
        _check_properties(violations, subject, v)
        if v.label in seen_vertex_labels:
            violations.append(Violation("V6", subject, f"vertex label {v.label!r} is already in use"))
        seen_vertex_labels.add(v.label)
        _reserved_label(violations, subject, v.label)

    for index, e in enumerate(schema.edges):
        subject = f"edge[{e.id}]"
        _check_label(violations, subject, e.label)
        _check_properties(violations, subject, e)

        if e.source is None or e.target is None:
            missing = [side for side, val in (("source", e.source), ("target", e.target)) if val is None]
            violations.append(Violation("V7", subject, f"edge {e.label!r} is missing {' and '.join(missing)} vertex"))

        endpoints = [ep for ep in (e.source, e.target) if ep is not None]
        if len(endpoints) == 2 and endpoints[0] is endpoints[1]:
            endpoints = endpoints[:1]
        flagged: set[str] = set()
        for endpoint in endpoints:
            ref_field = naming.vertex_ref_field_name(endpoint)
            if ref_field in e.property_keys() and ref_field not in flagged:
                flagged.add(ref_field)
                violations.append(Violation("V8", subject, f"vertex label {endpoint.label!r} clashes with property key {ref_field!r} on this edge"))

        directions = []
        for prior in schema.edges[:index]:
            if prior.label != e.label:
                continue
            if e.source is not None and prior.source is e.source:
                directions.append("outgoing")
            if e.target is not None and prior.target is e.target:
                directions.append("incoming")
        if directions:
            violations.append(Violation("V9", subject, f"edge label {e.label!r} is already used by another {' and '.join(dict.fromkeys(directions))} edge of the same vertex"))

        if e.target is not None:
            in_field = naming.adjacency_field_name(e, "in")
            if in_field in e.target.property_keys():
                violations.append(Violation("V10", subject, f"edge label {e.label!r} clashes with property key {in_field!r} on target vertex {e.target.label!r}"))
        if e.source is not None:
            out_field = naming.adjacency_field_name(e, "out")
            if out_field in e.source.property_keys():
                violations.append(Violation("V11", subject, f"edge label {e.label!r} clashes with property key {out_field!r} on source vertex {e.source.label!r}"))

        _reserved_label(violations, subject, e.label)

    if not violations:
        violations.extend(_inventory_sweep(schema))
    return violations
