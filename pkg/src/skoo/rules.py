"""Declarative mapping rules: graph patterns in, visual elements out.

Rule files are JSON arrays. Each rule has a `where` pattern (triples plus
optional type constraints) and `emit` templates for nodes, edges, texts or
shapes. Template fields substitute `{?var}` with the bound term; a filter
after the variable picks the rendering: `{?v}` is the prefixed name,
`{?v|iri}` the absolute IRI, `{?v|local}` the local name and `{?v|style}`
the local name lowercased with underscores turned into hyphens (the style
tokens the viewer keys its legend on). Terms in `where` that do not start
with `?` are prefixed names; they resolve against the prefix map of the
graph the rules are applied to, so rule files carry no prefix block.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .model import Iri, Ontology, PrefixError, PrefixMap, SkooError
from .patterns import GraphPattern, TypeConstraint, Var, match_pattern
from .reasoner import SubsumptionClosure
from .visual import (
    VisEdge,
    VisNode,
    VisShape,
    VisText,
    VisualModel,
)

EMIT_KINDS = ("node", "edge", "tree", "list", "text", "shape")
_TEMPLATE_KINDS = ("node", "edge", "text", "shape")
_FILTERS = ("iri", "local", "style")
_PLACEHOLDER_RE = re.compile(r"\{\?([A-Za-z_][A-Za-z0-9_]*)(?:\|([a-z]+))?\}")
_SHAPES = ("rect", "ellipse", "line")


class RuleError(SkooError):
    pass


class RuleParseError(RuleError):
    pass


class RuleConflictError(RuleError):
    """Two emits produced the same identity with different content."""


class DanglingEdgeError(RuleError):
    """An emitted edge references a node no rule emitted."""


@dataclass(frozen=True)
class EmitTemplate:
    kind: str
    fields: dict[str, str]  # raw template strings per field

    def placeholders(self) -> set[str]:
        names: set[str] = set()
        for value in self.fields.values():
            names.update(m.group(1) for m in _PLACEHOLDER_RE.finditer(value))
        return names


@dataclass(frozen=True)
class MappingRule:
    """A named pattern -> templates mapping. Terms stay as raw strings and
    resolve against the target graph's prefixes when applied."""

    name: str
    triples: tuple[tuple[str, str, str], ...]
    types: tuple[tuple[str, str, bool], ...]  # (var, class term, transitive)
    emit: tuple[EmitTemplate, ...]


_REQUIRED_FIELDS = {
    "node": ("id", "label", "class"),
    "edge": ("id", "from", "to", "label"),
    "text": ("id", "label"),
    "shape": ("id", "class"),
}


def parse_ruleset(text: str) -> list[MappingRule]:
    """Parses and structurally validates a rule file. Emit templates may
    only reference variables the rule's pattern binds."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RuleParseError(f"rule file is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise RuleParseError("rule file must be a JSON array of rules")

    rules: list[MappingRule] = []
    for i, entry in enumerate(data):
        where = entry.get("where", {}) if isinstance(entry, dict) else {}
        if not isinstance(entry, dict) or "name" not in entry:
            raise RuleParseError(f"rule #{i} has no name")
        name = entry["name"]
        raw_triples = where.get("triples", [])
        triples: list[tuple[str, str, str]] = []
        for t in raw_triples:
            if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, str) for x in t)):
                raise RuleParseError(f"rule {name!r}: each triple must be a [s, p, o] string array")
            triples.append((t[0], t[1], t[2]))
        types: list[tuple[str, str, bool]] = []
        for tc in where.get("types", []):
            if not isinstance(tc, dict) or not {"var", "class"} <= set(tc):
                raise RuleParseError(f"rule {name!r}: type constraint needs 'var' and 'class'")
            types.append((tc["var"], tc["class"], bool(tc.get("transitive", False))))

        bound = {
            term[1:]
            for triple in triples
            for term in triple
            if term.startswith("?")
        }
        for var, _, _ in types:
            if not var.startswith("?") or var[1:] not in bound:
                raise RuleParseError(
                    f"rule {name!r}: type constraint variable {var} is not bound by any triple"
                )

        emits: list[EmitTemplate] = []
        for raw in entry.get("emit", []):
            kind = raw.get("kind") if isinstance(raw, dict) else None
            if kind not in EMIT_KINDS:
                raise RuleParseError(f"rule {name!r}: unknown element kind {kind!r}")
            if kind not in _TEMPLATE_KINDS:
                raise RuleParseError(
                    f"rule {name!r}: {kind} elements cannot be emitted from rules"
                )
            fields = {
                k: v for k, v in raw.items() if k != "kind" and isinstance(v, str)
            }
            for required in _REQUIRED_FIELDS[kind]:
                if required not in fields:
                    raise RuleParseError(f"rule {name!r}: {kind} emit needs {required!r}")
            template = EmitTemplate(kind=kind, fields=fields)
            for var in sorted(template.placeholders()):
                if var not in bound:
                    raise RuleParseError(
                        f"rule {name!r}: emit references ?{var} which 'where' does not bind"
                    )
            for m in _PLACEHOLDER_RE.finditer(" ".join(template.fields.values())):
                if m.group(2) is not None and m.group(2) not in _FILTERS:
                    raise RuleParseError(
                        f"rule {name!r}: unknown template filter {m.group(2)!r}"
                    )
            emits.append(template)

        rules.append(
            MappingRule(name=name, triples=tuple(triples), types=tuple(types), emit=tuple(emits))
        )
    return rules


def default_ruleset() -> list[MappingRule]:
    text = resources.files("skoo").joinpath("rules/default.json").read_text("utf-8")
    return parse_ruleset(text)


def _resolve_term(term: str, prefixes: PrefixMap, rule: str) -> "Var | Iri":
    if term.startswith("?"):
        return Var(term[1:])
    if term == "a":
        from .model import RDF_TYPE

        return RDF_TYPE
    try:
        return prefixes.expand(term)
    except PrefixError as exc:
        raise RuleError(f"rule {rule!r}: cannot resolve term {term!r}: {exc}") from exc


def _compile_pattern(rule: MappingRule, prefixes: PrefixMap) -> GraphPattern:
    triples = tuple(
        (
            _resolve_term(s, prefixes, rule.name),
            _resolve_term(p, prefixes, rule.name),
            _resolve_term(o, prefixes, rule.name),
        )
        for s, p, o in rule.triples
    )
    constraints = []
    for var, cls, transitive in rule.types:
        resolved = _resolve_term(cls, prefixes, rule.name)
        if isinstance(resolved, Var):
            raise RuleError(f"rule {rule.name!r}: type constraint class cannot be a variable")
        constraints.append(TypeConstraint(Var(var[1:]), resolved, transitive))
    return GraphPattern(triples=triples, constraints=tuple(constraints))


def style_token(iri: Iri) -> str:
    return iri.local_name.lower().replace("_", "-")


def _substitute(template: str, binding: dict[Var, "Iri | str"], prefixes: PrefixMap, rule: str) -> str:
    def replace(m: re.Match[str]) -> str:
        var = Var(m.group(1))
        value = binding[var]
        if isinstance(value, str):
            return value
        if m.group(2) == "iri":
            return value.value
        if m.group(2) == "local":
            return value.local_name
        if m.group(2) == "style":
            return style_token(value)
        return value.curie(prefixes)

    return _PLACEHOLDER_RE.sub(replace, template)


def apply_rules(
    graph: Ontology, closure: SubsumptionClosure, rules: list[MappingRule]
) -> VisualModel:
    """Runs every rule over the graph and assembles the visual model.

    Elements are keyed by identity: re-emitting an identical element is a
    no-op, re-emitting a different one with the same id is an error, and
    edges pointing at ids no rule emitted as nodes are an error.
    """
    elements: dict[str, object] = {}
    order: list[str] = []

    for rule in rules:
        pattern = _compile_pattern(rule, graph.prefixes)
        bindings = match_pattern(graph, closure, pattern)
        for binding in bindings.as_dicts():
            for template in rule.emit:
                element = _instantiate(template, binding, graph.prefixes, rule.name)
                identity = element.id  # type: ignore[attr-defined]
                if identity in elements:
                    if elements[identity] != element:
                        raise RuleConflictError(
                            f"rule {rule.name!r} re-emits id {identity!r} with different content"
                        )
                    continue
                elements[identity] = element
                order.append(identity)

    nodes = tuple(e for i in order if isinstance(e := elements[i], VisNode))
    edges = tuple(e for i in order if isinstance(e := elements[i], VisEdge))
    texts = tuple(e for i in order if isinstance(e := elements[i], VisText))
    shapes = tuple(e for i in order if isinstance(e := elements[i], VisShape))

    node_ids = {n.id for n in nodes}
    for edge in edges:
        for endpoint in (edge.src, edge.dst):
            if endpoint not in node_ids:
                raise DanglingEdgeError(
                    f"edge {edge.id!r} references {endpoint!r}, which no rule emitted as a node"
                )

    return VisualModel(nodes=nodes, edges=edges, texts=texts, shapes=shapes)


def _instantiate(
    template: EmitTemplate, binding: dict, prefixes: PrefixMap, rule: str
) -> "VisNode | VisEdge | VisText | VisShape":
    def sub(field_name: str) -> str:
        return _substitute(template.fields[field_name], binding, prefixes, rule)

    if template.kind == "node":
        payload = None
        if "payload" in template.fields:
            payload = Iri(sub("payload"))
        return VisNode(id=sub("id"), label=sub("label"), style_class=sub("class"), payload=payload)
    if template.kind == "edge":
        return VisEdge(id=sub("id"), src=sub("from"), dst=sub("to"), label=sub("label"))
    if template.kind == "text":
        return VisText(id=sub("id"), content=sub("label"))
    shape = template.fields["class"]
    if shape not in _SHAPES:
        raise RuleError(f"rule {rule!r}: shape kind must be one of {_SHAPES}, got {shape!r}")
    return VisShape(id=sub("id"), shape=shape)
