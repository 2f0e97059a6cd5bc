"""Conjunctive graph-pattern matching over an ABox.

A pattern is a list of triples whose positions hold variables, IRIs or
literals, plus type constraints restricting what a variable's bindings may
be instances of. Matching is a nested-loop join in triple order with a
per-predicate index; fixture-scale graphs need nothing smarter. Results use
set semantics and a deterministic sort order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    RDF_TYPE,
    AssertionKind,
    Iri,
    Ontology,
    SkooError,
)
from .reasoner import SubsumptionClosure, infer_types


class PatternError(SkooError):
    """A pattern violates its structural invariants."""


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


PatternTerm = "Var | Iri | str"  # a pattern position: variable, IRI, or literal
Triple = tuple["Var | Iri | str", "Var | Iri | str", "Var | Iri | str"]


@dataclass(frozen=True, slots=True)
class TypeConstraint:
    var: Var
    cls: Iri
    transitive: bool


@dataclass(frozen=True)
class GraphPattern:
    triples: tuple[Triple, ...]
    constraints: tuple[TypeConstraint, ...] = ()

    def __post_init__(self) -> None:
        bound = {t for triple in self.triples for t in triple if isinstance(t, Var)}
        for constraint in self.constraints:
            if constraint.var not in bound:
                raise PatternError(
                    f"type constraint variable {constraint.var} appears in no triple"
                )

    def variables(self) -> tuple[Var, ...]:
        """Variables in first-appearance order."""
        seen: list[Var] = []
        for triple in self.triples:
            for term in triple:
                if isinstance(term, Var) and term not in seen:
                    seen.append(term)
        return tuple(seen)


@dataclass(frozen=True)
class BindingSet:
    variables: tuple[Var, ...]
    rows: tuple[tuple["Iri | str", ...], ...]

    def as_dicts(self) -> list[dict[Var, "Iri | str"]]:
        return [dict(zip(self.variables, row)) for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)


def abox_triples(graph: Ontology) -> list[tuple[Iri, Iri, "Iri | str"]]:
    """Uniform triple view of the ABox; type assertions surface rdf:type."""
    out: list[tuple[Iri, Iri, Iri | str]] = []
    for a in graph.abox:
        if a.kind is AssertionKind.TYPE_OF:
            out.append((a.subject, RDF_TYPE, a.object))
        else:
            assert a.predicate is not None
            out.append((a.subject, a.predicate, a.object))
    return out


def _term_key(term: "Iri | str") -> tuple[int, str]:
    return (0, term.value) if isinstance(term, Iri) else (1, term)


def match_pattern(
    graph: Ontology, closure: SubsumptionClosure, pattern: GraphPattern
) -> BindingSet:
    """All assignments making every pattern triple an ABox assertion and
    every type constraint hold. Transitive constraints consult inferred
    types through the closure; direct ones require an asserted type."""
    triples = abox_triples(graph)
    by_predicate: dict[Iri, list[tuple[Iri, Iri, Iri | str]]] = {}
    for t in triples:
        by_predicate.setdefault(t[1], []).append(t)

    rows: list[dict[Var, Iri | str]] = [{}]
    for ptriple in pattern.triples:
        next_rows: list[dict[Var, Iri | str]] = []
        for binding in rows:
            pp = ptriple[1]
            p = binding.get(pp) if isinstance(pp, Var) else pp
            candidates = by_predicate.get(p, []) if isinstance(p, Iri) else triples
            for candidate in candidates:
                extended = dict(binding)
                ok = True
                for pterm, value in zip(ptriple, candidate):
                    if isinstance(pterm, Var):
                        if pterm in extended:
                            if not _terms_equal(extended[pterm], value):
                                ok = False
                                break
                        else:
                            extended[pterm] = value
                    elif not _terms_equal(pterm, value):
                        ok = False
                        break
                if ok:
                    next_rows.append(extended)
        rows = next_rows
        if not rows:
            break

    if pattern.constraints and rows:
        inferred = infer_types(graph, closure)
        inferred_by_ind: dict[Iri, set[Iri]] = {}
        for ind, cls in inferred:
            inferred_by_ind.setdefault(ind, set()).add(cls)
        asserted: set[tuple[Iri, Iri]] = {
            (a.subject, a.object)  # type: ignore[misc]
            for a in graph.abox
            if a.kind is AssertionKind.TYPE_OF
        }
        kept = []
        for binding in rows:
            if all(
                _constraint_holds(c, binding, inferred_by_ind, asserted)
                for c in pattern.constraints
            ):
                kept.append(binding)
        rows = kept

    variables = pattern.variables()
    unique = {tuple(binding[v] for v in variables) for binding in rows}
    ordered = sorted(unique, key=lambda row: tuple(_term_key(t) for t in row))
    return BindingSet(variables=variables, rows=tuple(ordered))


def _terms_equal(a: "Iri | str", b: "Iri | str") -> bool:
    if isinstance(a, Iri) and isinstance(b, Iri):
        return a == b
    if isinstance(a, str) and isinstance(b, str):
        return a == b
    return False


def _constraint_holds(
    constraint: TypeConstraint,
    binding: dict[Var, "Iri | str"],
    inferred_by_ind: dict[Iri, set[Iri]],
    asserted: set[tuple[Iri, Iri]],
) -> bool:
    value = binding[constraint.var]
    if not isinstance(value, Iri):
        return False
    if constraint.transitive:
        return constraint.cls in inferred_by_ind.get(value, ())
    return (value, constraint.cls) in asserted
