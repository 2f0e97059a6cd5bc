"""Core data model: IRIs, axioms, assertions, and the Ontology container.

Everything here is an immutable value. Operations that "modify" an ontology
(add_axiom, merge) return a new one; inputs are never mutated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Union


class SkooError(Exception):
    """Base class for all errors raised by this package."""


class PrefixError(SkooError):
    """Unknown prefix label, or conflicting bindings for the same label."""


class KindMismatchError(SkooError):
    """An axiom uses an IRI in a role its declaration contradicts."""


_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*:")
_PNAME_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_.-]*)?:([A-Za-z0-9_][A-Za-z0-9_.-]*)$")


@dataclass(frozen=True, slots=True)
class Iri:
    """An absolute IRI. Two Iris are equal iff their strings are byte-equal."""

    value: str

    @property
    def local_name(self) -> str:
        """Text after the last '#', '/' or ':' separator."""
        for sep in ("#", "/"):
            if sep in self.value:
                return self.value.rsplit(sep, 1)[1]
        return self.value.rsplit(":", 1)[1]

    def curie(self, prefixes: PrefixMap) -> str:
        """Prefixed form if a registered namespace matches, else the full IRI."""
        compressed = prefixes.compress(self)
        return compressed if compressed is not None else self.value

    def __str__(self) -> str:
        return self.value


def is_valid_iri(text: str) -> bool:
    if not _SCHEME_RE.match(text):
        return False
    return not any(c in text for c in ' <>"{}|\\^`\n\t')


class PrefixMap:
    """Immutable label -> namespace bindings for prefixed-name resolution."""

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Mapping[str, str] | Iterable[tuple[str, str]] = ()):
        self._bindings = dict(bindings)

    @property
    def bindings(self) -> dict[str, str]:
        return dict(self._bindings)

    def bound(self, label: str, namespace: str) -> PrefixMap:
        """New map with one more binding. Rebinding a label to a different
        namespace is an error; rebinding to the same one is a no-op."""
        existing = self._bindings.get(label)
        if existing is not None and existing != namespace:
            raise PrefixError(
                f"prefix {label!r} already bound to <{existing}>, cannot rebind to <{namespace}>"
            )
        merged = dict(self._bindings)
        merged[label] = namespace
        return PrefixMap(merged)

    def merged(self, other: PrefixMap) -> PrefixMap:
        result = self
        for label, ns in other._bindings.items():
            result = result.bound(label, ns)
        return result

    def expand(self, prefixed: str) -> Iri:
        """Resolve a 'prefix:local' name. Unregistered prefixes are an error,
        never a silent passthrough."""
        m = _PNAME_RE.match(prefixed)
        if not m:
            raise PrefixError(f"not a prefixed name: {prefixed!r}")
        label = m.group(1) or ""
        if label not in self._bindings:
            raise PrefixError(f"unknown prefix {label!r} in {prefixed!r}")
        return Iri(self._bindings[label] + m.group(2))

    def compress(self, iri: Iri) -> str | None:
        """Best prefixed form for an IRI, or None if no namespace matches or
        the remainder is not a valid local name. Longest namespace wins;
        ties go to the lexicographically smallest label."""
        best: tuple[int, str, str] | None = None
        for label, ns in self._bindings.items():
            if iri.value.startswith(ns) and len(iri.value) > len(ns):
                local = iri.value[len(ns):]
                # A trailing dot would read back as a statement terminator.
                if local.endswith(".") or not _PNAME_RE.match(f"{label}:{local}"):
                    continue
                key = (-len(ns), label, local)
                if best is None or key < best:
                    best = key
        if best is None:
            return None
        return f"{best[1]}:{best[2]}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrefixMap) and self._bindings == other._bindings

    def __repr__(self) -> str:
        return f"PrefixMap({self._bindings!r})"


class AxiomKind(Enum):
    SUB_CLASS_OF = "subClassOf"
    EQUIVALENT_CLASS = "equivalentClass"
    DISJOINT_WITH = "disjointWith"
    DOMAIN = "domain"
    RANGE = "range"


# Kinds whose subject/object order carries no meaning; stored canonically.
SYMMETRIC_KINDS = frozenset({AxiomKind.EQUIVALENT_CLASS, AxiomKind.DISJOINT_WITH})


@dataclass(frozen=True, slots=True)
class Axiom:
    """A TBox axiom. Symmetric kinds (disjointness, equivalence) are stored
    with the lexicographically smaller IRI first, so the axiom set is
    insensitive to the order the pair was written in."""

    kind: AxiomKind
    subject: Iri
    object: Iri

    def __post_init__(self) -> None:
        if self.kind in SYMMETRIC_KINDS and self.object.value < self.subject.value:
            swap = self.subject
            object.__setattr__(self, "subject", self.object)
            object.__setattr__(self, "object", swap)


class AssertionKind(Enum):
    TYPE_OF = "typeOf"
    RELATION = "relation"


Literal = str
Term = Union[Iri, Literal]


@dataclass(frozen=True, slots=True)
class Assertion:
    """An ABox assertion: either `subject a object` (TYPE_OF, predicate None)
    or `subject predicate object` (RELATION). Literal objects are plain
    strings and keep their lexical form verbatim."""

    kind: AssertionKind
    subject: Iri
    predicate: Iri | None
    object: Term

    def __post_init__(self) -> None:
        if self.kind is AssertionKind.TYPE_OF:
            if self.predicate is not None:
                raise ValueError("TYPE_OF assertions carry no predicate")
            if not isinstance(self.object, Iri):
                raise ValueError("TYPE_OF assertions need a class IRI object")
        elif self.predicate is None:
            raise ValueError("RELATION assertions need a predicate")


def type_of(subject: Iri, cls: Iri) -> Assertion:
    return Assertion(AssertionKind.TYPE_OF, subject, None, cls)


def relation(subject: Iri, predicate: Iri, obj: Term) -> Assertion:
    return Assertion(AssertionKind.RELATION, subject, predicate, obj)


@dataclass(frozen=True, slots=True)
class Ontology:
    """A TBox + ABox with declarations and the prefix map they were read
    under. Immutable; safe to share across threads."""

    prefixes: PrefixMap = field(default_factory=PrefixMap)
    tbox: frozenset[Axiom] = frozenset()
    abox: frozenset[Assertion] = frozenset()
    declared_classes: frozenset[Iri] = frozenset()
    declared_properties: frozenset[Iri] = frozenset()

    @staticmethod
    def empty() -> Ontology:
        return Ontology()

    def resolve(self, term: str) -> Iri:
        """IRI for a prefixed name (resolved against this ontology's
        prefixes) or an absolute-IRI string. Anything shaped like a prefixed
        name must have a registered prefix; there is no passthrough."""
        if _PNAME_RE.match(term):
            return self.prefixes.expand(term)
        if is_valid_iri(term):
            return Iri(term)
        raise PrefixError(f"neither an absolute IRI nor a resolvable prefixed name: {term!r}")

    def classes_in_use(self) -> frozenset[Iri]:
        """Declared classes plus every IRI in a class position of the TBox."""
        found = set(self.declared_classes)
        for ax in self.tbox:
            if ax.kind in (AxiomKind.SUB_CLASS_OF, AxiomKind.EQUIVALENT_CLASS, AxiomKind.DISJOINT_WITH):
                found.add(ax.subject)
                found.add(ax.object)
            else:
                found.add(ax.object)
        return frozenset(found)


def add_axiom(ontology: Ontology, axiom: Axiom) -> Ontology:
    """Ontology with the axiom added (idempotent on re-add).

    Domain/Range axioms whose subject is a declared class are rejected:
    the subject slot of those kinds is a property.
    """
    if axiom.kind in (AxiomKind.DOMAIN, AxiomKind.RANGE):
        if axiom.subject in ontology.declared_classes:
            raise KindMismatchError(
                f"{axiom.kind.value} axiom subject <{axiom.subject}> is a declared class, not a property"
            )
    if axiom in ontology.tbox:
        return ontology
    return Ontology(
        prefixes=ontology.prefixes,
        tbox=ontology.tbox | {axiom},
        abox=ontology.abox,
        declared_classes=ontology.declared_classes,
        declared_properties=ontology.declared_properties,
    )


def add_assertion(ontology: Ontology, assertion: Assertion) -> Ontology:
    if assertion in ontology.abox:
        return ontology
    return Ontology(
        prefixes=ontology.prefixes,
        tbox=ontology.tbox,
        abox=ontology.abox | {assertion},
        declared_classes=ontology.declared_classes,
        declared_properties=ontology.declared_properties,
    )


def merge(first: Ontology, *rest: Ontology) -> Ontology:
    """Set union of two or more ontologies.

    Prefix maps may overlap only on identical bindings; the same label bound
    to two different namespaces raises PrefixError. Commutative and
    associative up to set equality.
    """
    prefixes = first.prefixes
    tbox = set(first.tbox)
    abox = set(first.abox)
    classes = set(first.declared_classes)
    properties = set(first.declared_properties)
    for other in rest:
        prefixes = prefixes.merged(other.prefixes)
        tbox |= other.tbox
        abox |= other.abox
        classes |= other.declared_classes
        properties |= other.declared_properties
    return Ontology(
        prefixes=prefixes,
        tbox=frozenset(tbox),
        abox=frozenset(abox),
        declared_classes=frozenset(classes),
        declared_properties=frozenset(properties),
    )


# Well-known vocabulary the parser and reasoner route on.
RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
RDFS_SUBCLASSOF = Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf")
RDFS_DOMAIN = Iri("http://www.w3.org/2000/01/rdf-schema#domain")
RDFS_RANGE = Iri("http://www.w3.org/2000/01/rdf-schema#range")
OWL_EQUIVALENT_CLASS = Iri("http://www.w3.org/2002/07/owl#equivalentClass")
OWL_DISJOINT_WITH = Iri("http://www.w3.org/2002/07/owl#disjointWith")
OWL_CLASS = Iri("http://www.w3.org/2002/07/owl#Class")
OWL_OBJECT_PROPERTY = Iri("http://www.w3.org/2002/07/owl#ObjectProperty")
