import random

import pytest

from oracles import random_small_ontology
from skoo.bundle import SCHEMA_FILES, schema_bytes
from skoo.model import AssertionKind, AxiomKind, Iri, Ontology
from skoo.turtle import (
    TurtleParseError,
    parse_turtle,
    parse_turtle_tolerant,
    serialize_turtle,
)

SKOO = "http://purl.org/net/skoo#"


def test_single_subclass_statement():
    text = "@prefix skoo: <http://purl.org/net/skoo#> . skoo:Proof rdfs:subClassOf skoo:Sci_Knowledge_Item ."
    # rdfs prefix must be declared; undeclared prefix is an error
    with pytest.raises(TurtleParseError):
        parse_turtle(text)
    text = (
        "@prefix skoo: <http://purl.org/net/skoo#> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "skoo:Proof rdfs:subClassOf skoo:Sci_Knowledge_Item .\n"
    )
    ont = parse_turtle(text)
    assert len(ont.tbox) == 1
    ax = next(iter(ont.tbox))
    assert ax.kind is AxiomKind.SUB_CLASS_OF
    assert ax.subject == Iri(SKOO + "Proof")
    assert ax.object == Iri(SKOO + "Sci_Knowledge_Item")


def test_empty_input():
    ont, diagnostics = parse_turtle_tolerant("")
    assert ont == Ontology.empty()
    assert diagnostics == []


def test_alignment_fixture_axiom_count():
    ont = parse_turtle(schema_bytes("alignment.ttl").decode())
    assert len(ont.tbox) == 19
    assert all(
        ax.kind in (AxiomKind.SUB_CLASS_OF, AxiomKind.EQUIVALENT_CLASS) for ax in ont.tbox
    )


def test_object_and_predicate_lists():
    text = (
        "@prefix ex: <http://example.org/> .\n"
        "ex:a ex:p ex:b , ex:c ; ex:q ex:d .\n"
    )
    ont = parse_turtle(text)
    assert len(ont.abox) == 3


def test_literal_kept_verbatim():
    text = '@prefix ex: <http://example.org/> .\nex:a ex:p " padded  text\\n" .\n'
    ont = parse_turtle(text)
    assertion = next(iter(ont.abox))
    assert assertion.object == " padded  text\n"


def test_unknown_predicate_becomes_relation():
    text = "@prefix ex: <http://example.org/> .\nex:a ex:madeUp ex:b .\n"
    ont = parse_turtle(text)
    assert len(ont.abox) == 1
    assert next(iter(ont.abox)).kind is AssertionKind.RELATION


def test_declarations_populate_class_and_property_sets():
    text = (
        "@prefix ex: <http://example.org/> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "ex:K a owl:Class .\n"
        "ex:p a owl:ObjectProperty .\n"
        "ex:i a ex:K .\n"
    )
    ont = parse_turtle(text)
    assert ont.declared_classes == {Iri("http://example.org/K")}
    assert ont.declared_properties == {Iri("http://example.org/p")}
    assert len(ont.abox) == 1  # only the instance typing


def test_syntax_error_carries_position():
    text = "@prefix ex: <http://example.org/> .\nex:a ex:p .\n"
    with pytest.raises(TurtleParseError) as excinfo:
        parse_turtle(text)
    diag = excinfo.value.diagnostics[0]
    assert diag.line == 2
    assert diag.column >= 1


def test_conflicting_prefix_is_an_error():
    text = (
        "@prefix ex: <http://example.org/> .\n"
        "@prefix ex: <http://example.com/> .\n"
    )
    with pytest.raises(TurtleParseError):
        parse_turtle(text)


def test_tolerant_mode_keeps_statements_before_error():
    text = (
        "@prefix ex: <http://example.org/> .\n"
        "ex:a ex:p ex:b .\n"
        "ex:broken ex:q .\n"
        "ex:c ex:r ex:d .\n"
    )
    ont, diagnostics = parse_turtle_tolerant(text)
    assert len(ont.abox) == 2  # both complete statements survive
    assert len(diagnostics) == 1
    assert diagnostics[0].line == 3


def test_tolerant_mode_survives_lexical_error():
    text = (
        "@prefix ex: <http://example.org/> .\n"
        "ex:a ex:p ex:b .\n"
        'ex:c ex:q "unterminated .\n'
    )
    ont, diagnostics = parse_turtle_tolerant(text)
    assert len(ont.abox) == 1
    assert any(d.line == 3 for d in diagnostics)


def test_domain_on_declared_class_is_rejected_regardless_of_order():
    text = (
        "@prefix ex: <http://example.org/> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "ex:K rdfs:domain ex:L .\n"
        "ex:K a owl:Class .\n"
    )
    with pytest.raises(TurtleParseError):
        parse_turtle(text)


@pytest.mark.parametrize("name", SCHEMA_FILES)
def test_shipped_files_round_trip(name):
    original = parse_turtle(schema_bytes(name).decode())
    reparsed = parse_turtle(serialize_turtle(original))
    assert reparsed == original


def test_serialization_is_deterministic(bundle):
    assert serialize_turtle(bundle.skoo) == serialize_turtle(bundle.skoo)


def test_serialize_empty_ontology():
    assert serialize_turtle(Ontology.empty()) == ""


def test_random_round_trips():
    rng = random.Random(20260809)
    for _ in range(100):
        ont = random_small_ontology(rng)
        text = serialize_turtle(ont)
        assert parse_turtle(text) == ont
