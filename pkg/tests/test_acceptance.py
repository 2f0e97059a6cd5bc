"""Acceptance criteria, one test per criterion.

Each test prints a single PASS line when its criterion holds (visible with
`pytest -s` or `-v` plus `-rA`); a failed assertion means the criterion is
not met. Budgets are asserted where the criterion states one.
"""

import json
import random
import time

import pytest

from oracles import brute_force_reach, naive_match, random_match_case, random_ontology, random_small_ontology
from skoo.bundle import SCHEMA_FILES, alignment_axioms, load_bundle, schema_bytes
from skoo.cli import main
from skoo.model import Axiom, AxiomKind, Iri
from skoo.patterns import match_pattern
from skoo.reasoner import subsumption_closure
from skoo.turtle import parse_turtle, serialize_turtle
from skoo.visual import from_json, validate_visual_model

SKOO = "http://purl.org/net/skoo#"
OMDOC = "http://omdoc.org/ontology#"
DOLCE = "http://www.loa-cnr.it/ontologies/DOLCE-Lite.owl#"
WN = "http://purl.org/net/skoo/wn#"


def passed(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


def test_merged_consistency_reproduction(capsys):
    start = time.perf_counter()
    code = main(["check", "--fragments", "all", "--alignment"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    report = json.loads(out)
    assert code == 0
    assert report["consistent"] is True
    assert report["unsatisfiable_classes"] == []
    assert elapsed < 1.0, f"check took {elapsed:.3f}s, budget is 1s"
    with capsys.disabled():
        passed("merged-consistency")


def test_alignment_correspondence_fidelity():
    axioms = alignment_axioms()
    assert len(axioms) == 19

    def sub(a, b):
        return Axiom(AxiomKind.SUB_CLASS_OF, Iri(a), Iri(b))

    rows = {
        "Sci_Knowledge_Item": [
            sub(OMDOC + "MathKnowledgeItem", SKOO + "Sci_Knowledge_Item"),
            sub(SKOO + "Sci_Knowledge_Item", DOLCE + "description"),
        ],
        "Statement": [
            sub(OMDOC + "Statement", SKOO + "Statement"),
            sub(SKOO + "Statement", WN + "statement"),
        ],
        "Theory": [
            sub(OMDOC + "Theory", SKOO + "Theory"),
            sub(SKOO + "Theory", DOLCE + "theory"),
            sub(SKOO + "Theory", WN + "theory"),
        ],
        "Assertion": [
            sub(OMDOC + "Assertion", SKOO + "Assertion"),
            sub(SKOO + "Assertion", WN + "assertion"),
        ],
        "Axiom": [
            sub(OMDOC + "Axiom", SKOO + "Axiom"),
            sub(SKOO + "Axiom", WN + "axiom"),
        ],
        "Definition": [
            sub(OMDOC + "Definition", SKOO + "Definition"),
            sub(SKOO + "Definition", WN + "definition"),
        ],
        "Proof": [
            sub(OMDOC + "Proof", SKOO + "Proof"),
            sub(SKOO + "Proof", WN + "proof"),
        ],
        "Sci_Activity": [sub(SKOO + "Sci_Activity", WN + "activity")],
        "Process": [
            sub(DOLCE + "activity", SKOO + "Process"),
            sub(SKOO + "Process", WN + "process"),
        ],
        "Sci_Information_Object": [
            sub(SKOO + "Sci_Information_Object", DOLCE + "information-object"),
        ],
    }
    assert len(rows) == 10
    for row, expected in rows.items():
        for ax in expected:
            assert ax in axioms, f"alignment row {row}: missing {ax}"
    assert sum(len(v) for v in rows.values()) == 19

    closure = subsumption_closure(load_bundle().merged())
    assert closure.is_subclass_of(Iri(OMDOC + "Axiom"), Iri(WN + "axiom"))
    assert closure.is_subclass_of(
        Iri(OMDOC + "MathKnowledgeItem"), Iri(DOLCE + "description")
    )
    passed("alignment-correspondences")


def test_counterexample_regression():
    bundle = load_bundle()
    wn_closure = subsumption_closure(bundle.fragment("wordnet"))
    assert not wn_closure.is_subclass_of(Iri(WN + "corollary"), Iri(WN + "theorem"))
    assert wn_closure.is_subclass_of(Iri(WN + "theorem"), Iri(WN + "cognition"))
    skoo_closure = subsumption_closure(bundle.skoo)
    assert skoo_closure.is_subclass_of(Iri(SKOO + "Corollary"), Iri(SKOO + "Theorem"))
    passed("hypernym-counterexample")


def test_reasoner_oracle_suite():
    rng = random.Random(1701)
    start = time.perf_counter()
    for case in range(200):
        ontology = random_ontology(rng, max_classes=50, max_edges=150, max_equivalences=10)
        closure = subsumption_closure(ontology)
        oracle = brute_force_reach(ontology)
        for cls, expected in oracle.items():
            assert closure.superclasses_of(cls) == expected, f"case {case}, class {cls}"
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"oracle suite took {elapsed:.2f}s, budget is 10s"
    passed(f"reasoner-oracle-200-cases ({elapsed:.2f}s)")


def test_matcher_oracle_suite():
    rng = random.Random(1702)
    start = time.perf_counter()
    for case in range(100):
        graph, pattern = random_match_case(rng)
        closure = subsumption_closure(graph)
        fast = set(match_pattern(graph, closure, pattern).rows)
        slow = naive_match(graph, pattern)
        assert fast == slow, f"case {case}"
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"matcher suite took {elapsed:.2f}s, budget is 10s"
    passed(f"matcher-oracle-100-cases ({elapsed:.2f}s)")


def test_fixture_pipeline(capsys):
    code = main(["viz", "fixtures/wille-ch3.ttl", "--rules", "default", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    model = from_json(out)
    assert validate_visual_model(model) == []
    assert len(model.nodes) == 5
    assert len(model.edges) == 3
    assert {n.style_class for n in model.nodes} == {
        "law",
        "equation",
        "theorem",
        "notation",
        "domain-object",
    }

    assert main(["viz", "fixtures/wille-ch3.ttl", "--rules", "default", "--format", "dot"]) == 0
    first = capsys.readouterr().out
    assert main(["viz", "fixtures/wille-ch3.ttl", "--rules", "default", "--format", "dot"]) == 0
    second = capsys.readouterr().out
    assert first == second and first
    with capsys.disabled():
        passed("fixture-pipeline")


def test_turtle_round_trip():
    for name in SCHEMA_FILES:
        original = parse_turtle(schema_bytes(name).decode())
        assert parse_turtle(serialize_turtle(original)) == original, name
    rng = random.Random(1703)
    for case in range(100):
        ontology = random_small_ontology(rng)
        assert parse_turtle(serialize_turtle(ontology)) == ontology, f"case {case}"
    passed("turtle-round-trip")
