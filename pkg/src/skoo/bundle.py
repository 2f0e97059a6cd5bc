"""Loads the shipped schema files and validates instance graphs against them.

The `.ttl` files under ``skoo/schema/`` are the single source of truth for
the class hierarchy, the external fragments, the correspondence axioms and
the demo fixture; this module only parses and packages them. Hierarchy
placement questions are therefore settled in data, not code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .model import (
    AssertionKind,
    Axiom,
    AxiomKind,
    Iri,
    Ontology,
    SkooError,
    merge,
)
from .reasoner import check_consistency, subsumption_closure
from .turtle import parse_turtle

SKOO_NS = "http://purl.org/net/skoo#"
FRAGMENT_NAMES = ("dolce", "wordnet", "omdoc")

SCHEMA_FILES = (
    "skoo.ttl",
    "dolce-frag.ttl",
    "wordnet-frag.ttl",
    "omdoc-frag.ttl",
    "alignment.ttl",
    "fixtures/wille-ch3.ttl",
)


class SchemaError(SkooError):
    """Shipped schema data failed an integrity check."""


def schema_bytes(name: str) -> bytes:
    """Raw bytes of a shipped schema file, e.g. ``fixtures/wille-ch3.ttl``."""
    node = resources.files("skoo").joinpath("schema")
    for part in name.split("/"):
        node = node.joinpath(part)
    return node.read_bytes()


@dataclass(frozen=True)
class ValidationReport:
    items: tuple[tuple[str, Iri, str], ...]  # (severity, subject, message)

    @property
    def error_count(self) -> int:
        return sum(1 for severity, _, _ in self.items if severity == "error")

    @property
    def warning_count(self) -> int:
        return sum(1 for severity, _, _ in self.items if severity == "warning")

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "errors": self.error_count,
            "warnings": self.warning_count,
            "items": [
                {"severity": severity, "subject": subject.value, "message": message}
                for severity, subject, message in self.items
            ],
        }


@dataclass(frozen=True)
class SchemaBundle:
    skoo: Ontology
    fragments: dict[str, Ontology]
    alignment: frozenset[Axiom]
    fixtures: dict[str, Ontology]
    alignment_ontology: Ontology  # alignment axioms with their prefix map

    def fragment(self, name: str) -> Ontology:
        if name not in self.fragments:
            raise SchemaError(f"unknown fragment {name!r}, expected one of {FRAGMENT_NAMES}")
        return self.fragments[name]

    def merged(self, fragments: tuple[str, ...] = FRAGMENT_NAMES, alignment: bool = True) -> Ontology:
        parts = [self.skoo]
        parts.extend(self.fragment(n) for n in fragments)
        if alignment:
            parts.append(self.alignment_ontology)
        return merge(*parts)


def _parse_schema(name: str) -> Ontology:
    return parse_turtle(schema_bytes(name).decode("utf-8"))


@lru_cache(maxsize=1)
def load_bundle() -> SchemaBundle:
    skoo = _parse_schema("skoo.ttl")
    fragments = {
        "dolce": _parse_schema("dolce-frag.ttl"),
        "wordnet": _parse_schema("wordnet-frag.ttl"),
        "omdoc": _parse_schema("omdoc-frag.ttl"),
    }
    alignment_ontology = _parse_schema("alignment.ttl")
    fixtures = {"wille-ch3": _parse_schema("fixtures/wille-ch3.ttl")}

    alignment = alignment_ontology.tbox
    if len(alignment) != 19:
        raise SchemaError(f"alignment must hold 19 axioms, found {len(alignment)}")
    for ax in alignment:
        endpoints_in_skoo = sum(
            1 for iri in (ax.subject, ax.object) if iri.value.startswith(SKOO_NS)
        )
        if endpoints_in_skoo != 1:
            raise SchemaError(f"alignment axiom must bridge skoo to one fragment: {ax}")

    return SchemaBundle(
        skoo=skoo,
        fragments=fragments,
        alignment=alignment,
        fixtures=fixtures,
        alignment_ontology=alignment_ontology,
    )


def skoo_ontology() -> Ontology:
    return load_bundle().skoo


def external_fragment(name: str) -> Ontology:
    return load_bundle().fragment(name)


def alignment_axioms() -> frozenset[Axiom]:
    return load_bundle().alignment


def import_domain_ontology(
    bundle: SchemaBundle, domain: Ontology, top_classes: frozenset[Iri] | set[Iri]
) -> Ontology:
    """Merge a field-specific ontology under the schema, anchoring each of
    its listed top classes below the domain-object root."""
    for cls in top_classes:
        if cls not in domain.declared_classes:
            raise SchemaError(f"top class <{cls}> is not declared in the domain ontology")
    anchor = Iri(SKOO_NS + "Domain_Object")
    merged = merge(bundle.skoo, domain)
    axioms = merged.tbox | {
        Axiom(AxiomKind.SUB_CLASS_OF, cls, anchor) for cls in top_classes
    }
    return Ontology(
        prefixes=merged.prefixes,
        tbox=frozenset(axioms),
        abox=merged.abox,
        declared_classes=merged.declared_classes,
        declared_properties=merged.declared_properties,
    )


def validate_instance_graph(
    graph: Ontology, bundle: SchemaBundle, extra: tuple[Ontology, ...] = ()
) -> ValidationReport:
    """Checks an instance graph against the schema (plus any extra
    ontologies, e.g. fragments selected on the command line).

    Errors: individuals typed by unknown classes, individuals whose inferred
    types (including domain/range propagation) hit a disjointness, and
    classes the combined TBox makes unsatisfiable. Warnings: untyped
    individuals and foreign predicates lacking domain/range axioms.
    """
    merged = merge(bundle.skoo, *extra, graph)
    closure = subsumption_closure(merged)
    known_classes = merged.classes_in_use() | merged.declared_classes
    items: list[tuple[str, Iri, str]] = []

    asserted: dict[Iri, set[Iri]] = {}
    related: set[Iri] = set()
    for a in graph.abox:
        if a.kind is AssertionKind.TYPE_OF:
            assert isinstance(a.object, Iri)
            asserted.setdefault(a.subject, set()).add(a.object)
        else:
            related.add(a.subject)
            if isinstance(a.object, Iri):
                related.add(a.object)

    for ind in sorted(asserted, key=lambda i: i.value):
        for cls in sorted(asserted[ind], key=lambda c: c.value):
            if cls not in known_classes:
                items.append(("error", ind, f"typed by unknown class <{cls}>"))

    report = check_consistency(merged)
    for cls in report.unsatisfiable_classes:
        items.append(("error", cls, "class is unsatisfiable in the combined hierarchy"))
    for ind, a, b in report.conflicting_individuals:
        items.append(
            ("error", ind, f"inferred types include disjoint classes <{a}> and <{b}>")
        )

    for ind in sorted(related - set(asserted), key=lambda i: i.value):
        items.append(("warning", ind, "individual has no asserted type"))

    domains_ranges = {
        ax.subject for ax in merged.tbox if ax.kind in (AxiomKind.DOMAIN, AxiomKind.RANGE)
    }
    predicates = {
        a.predicate for a in graph.abox if a.kind is AssertionKind.RELATION
    }
    for pred in sorted((p for p in predicates if p is not None), key=lambda p: p.value):
        if pred not in merged.declared_properties and pred not in domains_ranges:
            items.append(("warning", pred, "foreign predicate without domain or range"))

    return ValidationReport(items=tuple(items))
