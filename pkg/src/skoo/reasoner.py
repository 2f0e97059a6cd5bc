"""Subsumption closure, consistency checking and instance type inference.

The fragment implemented here is exactly what the embedded schemas exercise:
transitive subsumption with equivalence merging (subclass cycles collapse to
equivalences), disjointness clash detection with witness chains, and
domain/range type propagation. The closure itself runs on a swappable
kernel: the compiled `skoo._closure` extension when built, otherwise the
pure-Python `skoo._closure_py`. Set SKOO_PURE_PYTHON=1 to force the
fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .model import Assertion, AssertionKind, Axiom, AxiomKind, Iri, Ontology, SkooError

if os.environ.get("SKOO_PURE_PYTHON"):
    from ._closure_py import closure_kernel

    CLOSURE_BACKEND = "python"
else:
    try:
        from ._closure import closure_kernel  # type: ignore[no-redef]

        CLOSURE_BACKEND = "cython"
    except ImportError:
        from ._closure_py import closure_kernel  # type: ignore[no-redef]

        CLOSURE_BACKEND = "python"


class UnknownClassError(SkooError):
    """A subsumption query named a class the closure has never seen."""


@dataclass(frozen=True)
class SubsumptionClosure:
    """The reflexive-transitive subclass relation of one (merged) TBox.

    `canon` maps every known class to the representative of its equivalence
    class (the lexicographically smallest member); `reachable` maps each
    representative to the set of representative superclasses, itself
    included. `members` inverts `canon`.
    """

    canon: dict[Iri, Iri]
    reachable: dict[Iri, frozenset[Iri]]
    members: dict[Iri, frozenset[Iri]]

    def known(self, cls: Iri) -> bool:
        return cls in self.canon

    def is_subclass_of(self, sub: Iri, sup: Iri) -> bool:
        for cls in (sub, sup):
            if cls not in self.canon:
                raise UnknownClassError(f"unknown class <{cls}>")
        return self.canon[sup] in self.reachable[self.canon[sub]]

    def superclasses_of(self, cls: Iri) -> frozenset[Iri]:
        """Every original class IRI entailed to subsume `cls`, reflexively."""
        if cls not in self.canon:
            raise UnknownClassError(f"unknown class <{cls}>")
        out: set[Iri] = set()
        for rep in self.reachable[self.canon[cls]]:
            out |= self.members[rep]
        return frozenset(out)

    def equivalents(self, cls: Iri) -> frozenset[Iri]:
        if cls not in self.canon:
            raise UnknownClassError(f"unknown class <{cls}>")
        return self.members[self.canon[cls]]


def _subclass_edges(ontology: Ontology) -> list[tuple[Iri, Iri]]:
    """Directed sub -> super edges; equivalences contribute both directions."""
    edges: list[tuple[Iri, Iri]] = []
    for ax in ontology.tbox:
        if ax.kind is AxiomKind.SUB_CLASS_OF:
            edges.append((ax.subject, ax.object))
        elif ax.kind is AxiomKind.EQUIVALENT_CLASS:
            edges.append((ax.subject, ax.object))
            edges.append((ax.object, ax.subject))
    return edges


def subsumption_closure(ontology: Ontology) -> SubsumptionClosure:
    classes = sorted(ontology.classes_in_use(), key=lambda c: c.value)
    index = {cls: i for i, cls in enumerate(classes)}
    edges = sorted(
        (index[s], index[o]) for s, o in _subclass_edges(ontology)
    )
    comp_of, masks = closure_kernel(len(classes), edges)

    rep_index: dict[int, int] = {}
    for i, comp in enumerate(comp_of):
        if comp not in rep_index or i < rep_index[comp]:
            rep_index[comp] = i
    rep_iri = {comp: classes[i] for comp, i in rep_index.items()}

    canon: dict[Iri, Iri] = {}
    members: dict[Iri, set[Iri]] = {}
    for i, comp in enumerate(comp_of):
        rep = rep_iri[comp]
        canon[classes[i]] = rep
        members.setdefault(rep, set()).add(classes[i])

    reachable: dict[Iri, frozenset[Iri]] = {}
    for comp, rep in rep_iri.items():
        mask = masks[comp]
        sups: set[Iri] = set()
        while mask:
            low_bit = mask & -mask
            sups.add(rep_iri[low_bit.bit_length() - 1])
            mask ^= low_bit
        reachable[rep] = frozenset(sups)

    return SubsumptionClosure(
        canon=canon,
        reachable=reachable,
        members={rep: frozenset(v) for rep, v in members.items()},
    )


def is_subclass_of(closure: SubsumptionClosure, sub: Iri, sup: Iri) -> bool:
    return closure.is_subclass_of(sub, sup)


def infer_types(ontology: Ontology, closure: SubsumptionClosure) -> frozenset[tuple[Iri, Iri]]:
    """All (individual, class) pairs entailed for the ABox: asserted types,
    domain/range propagation from relations, both closed under
    superclassing. Asserted classes unknown to the closure contribute
    themselves only."""
    base = _base_types(ontology)
    inferred: set[tuple[Iri, Iri]] = set()
    for ind, types in base.items():
        for cls in types:
            if closure.known(cls):
                for sup in closure.superclasses_of(cls):
                    inferred.add((ind, sup))
            else:
                inferred.add((ind, cls))
    return frozenset(inferred)


def _property_constraints(ontology: Ontology) -> tuple[dict[Iri, set[Iri]], dict[Iri, set[Iri]]]:
    domains: dict[Iri, set[Iri]] = {}
    ranges: dict[Iri, set[Iri]] = {}
    for ax in ontology.tbox:
        if ax.kind is AxiomKind.DOMAIN:
            domains.setdefault(ax.subject, set()).add(ax.object)
        elif ax.kind is AxiomKind.RANGE:
            ranges.setdefault(ax.subject, set()).add(ax.object)
    return domains, ranges


def _base_types(ontology: Ontology) -> dict[Iri, set[Iri]]:
    """Directly attributable types: asserted plus domain/range propagated."""
    domains, ranges = _property_constraints(ontology)
    base: dict[Iri, set[Iri]] = {}
    for a in ontology.abox:
        if a.kind is AssertionKind.TYPE_OF:
            assert isinstance(a.object, Iri)
            base.setdefault(a.subject, set()).add(a.object)
        else:
            assert a.predicate is not None
            for cls in domains.get(a.predicate, ()):
                base.setdefault(a.subject, set()).add(cls)
            if isinstance(a.object, Iri):
                for cls in ranges.get(a.predicate, ()):
                    base.setdefault(a.object, set()).add(cls)
    return base


@dataclass(frozen=True)
class Witness:
    """Two axiom chains taking a subject down to a declared-disjoint pair."""

    subject: Iri
    kind: str  # "class" | "individual"
    disjoint: tuple[Iri, Iri]
    chains: tuple[tuple[Iri, ...], tuple[Iri, ...]]


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    unsatisfiable_classes: tuple[Iri, ...]
    conflicting_individuals: tuple[tuple[Iri, Iri, Iri], ...]
    witnesses: tuple[Witness, ...] = field(default=())

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "consistent": self.consistent,
            "unsatisfiable_classes": [c.value for c in self.unsatisfiable_classes],
            "conflicting_individuals": [
                {"individual": i.value, "classes": [a.value, b.value]}
                for i, a, b in self.conflicting_individuals
            ],
            "witnesses": [
                {
                    "subject": w.subject.value,
                    "kind": w.kind,
                    "disjoint": [w.disjoint[0].value, w.disjoint[1].value],
                    "chains": [[c.value for c in chain] for chain in w.chains],
                }
                for w in self.witnesses
            ],
        }


def _axiom_graph(ontology: Ontology) -> dict[Iri, list[Iri]]:
    """Adjacency for witness search, sorted for determinism."""
    adj: dict[Iri, set[Iri]] = {}
    for s, o in _subclass_edges(ontology):
        adj.setdefault(s, set()).add(o)
    return {k: sorted(v, key=lambda c: c.value) for k, v in adj.items()}


def _chain(adj: dict[Iri, list[Iri]], start: Iri, goal: Iri) -> tuple[Iri, ...] | None:
    """Shortest axiom chain start -> goal (BFS); None if unreachable."""
    if start == goal:
        return (start,)
    prev: dict[Iri, Iri] = {start: start}
    queue = [start]
    while queue:
        nxt: list[Iri] = []
        for node in queue:
            for succ in adj.get(node, ()):
                if succ in prev:
                    continue
                prev[succ] = node
                if succ == goal:
                    path = [succ]
                    while path[-1] != start:
                        path.append(prev[path[-1]])
                    return tuple(reversed(path))
                nxt.append(succ)
        queue = nxt
    return None


def check_consistency(ontology: Ontology) -> ConsistencyReport:
    """A class is unsatisfiable when its superclass set contains both sides
    of a disjointness axiom; an individual conflicts when its inferred types
    do. Witness chains replay the axioms that produce each clash."""
    closure = subsumption_closure(ontology)
    disjoint_pairs = sorted(
        (
            (ax.subject, ax.object)
            for ax in ontology.tbox
            if ax.kind is AxiomKind.DISJOINT_WITH
        ),
        key=lambda p: (p[0].value, p[1].value),
    )
    adj = _axiom_graph(ontology)

    unsat: list[Iri] = []
    witnesses: list[Witness] = []
    for cls in sorted(closure.canon, key=lambda c: c.value):
        sups = closure.superclasses_of(cls)
        for a, b in disjoint_pairs:
            if a in sups and b in sups:
                unsat.append(cls)
                chain_a = _chain(adj, cls, a)
                chain_b = _chain(adj, cls, b)
                if chain_a is not None and chain_b is not None:
                    witnesses.append(Witness(cls, "class", (a, b), (chain_a, chain_b)))
                break

    conflicts: list[tuple[Iri, Iri, Iri]] = []
    if disjoint_pairs:
        base = _base_types(ontology)
        closure_types: dict[Iri, frozenset[Iri]] = {}
        for ind, types in base.items():
            sups: set[Iri] = set()
            for cls in types:
                sups |= closure.superclasses_of(cls) if closure.known(cls) else {cls}
            closure_types[ind] = frozenset(sups)
        for ind in sorted(closure_types, key=lambda i: i.value):
            sups = closure_types[ind]
            for a, b in disjoint_pairs:
                if a in sups and b in sups:
                    conflicts.append((ind, a, b))
                    chains = _individual_chains(adj, sorted(base[ind], key=lambda c: c.value), a, b)
                    if chains is not None:
                        witnesses.append(Witness(ind, "individual", (a, b), chains))
                    break

    return ConsistencyReport(
        consistent=not unsat and not conflicts,
        unsatisfiable_classes=tuple(unsat),
        conflicting_individuals=tuple(conflicts),
        witnesses=tuple(witnesses),
    )


def _individual_chains(
    adj: dict[Iri, list[Iri]], start_types: list[Iri], a: Iri, b: Iri
) -> tuple[tuple[Iri, ...], tuple[Iri, ...]] | None:
    chain_a = chain_b = None
    for cls in start_types:
        if chain_a is None:
            chain_a = _chain(adj, cls, a)
        if chain_b is None:
            chain_b = _chain(adj, cls, b)
    if chain_a is None or chain_b is None:
        return None
    return (chain_a, chain_b)
