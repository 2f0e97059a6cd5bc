import random

import pytest

from oracles import naive_match, random_match_case
from skoo.model import Iri, Ontology, relation, type_of
from skoo.patterns import (
    GraphPattern,
    PatternError,
    TypeConstraint,
    Var,
    match_pattern,
)
from skoo.reasoner import subsumption_closure

SKOO = "http://purl.org/net/skoo#"
EX = "http://example.org/wille-ch3#"
RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")


def test_single_theorem_row(wille_merged, wille_closure):
    pattern = GraphPattern(triples=((Var("s"), RDF_TYPE, Iri(SKOO + "Theorem")),))
    result = match_pattern(wille_merged, wille_closure, pattern)
    assert result.rows == ((Iri(EX + "thm38"),),)


def test_transitive_statement_constraint(wille_merged, wille_closure):
    pattern = GraphPattern(
        triples=((Var("s"), RDF_TYPE, Var("c")),),
        constraints=(TypeConstraint(Var("s"), Iri(SKOO + "Statement"), True),),
    )
    result = match_pattern(wille_merged, wille_closure, pattern)
    subjects = {row[0] for row in result.rows}
    assert subjects == {Iri(EX + "thm38"), Iri(EX + "dispersionLaw")}
    assert len(result) == 2


def test_direct_constraint_requires_asserted_type(wille_merged, wille_closure):
    pattern = GraphPattern(
        triples=((Var("s"), RDF_TYPE, Var("c")),),
        constraints=(TypeConstraint(Var("s"), Iri(SKOO + "Statement"), False),),
    )
    result = match_pattern(wille_merged, wille_closure, pattern)
    assert len(result) == 0  # nothing is asserted as a Statement directly


def test_empty_graph_matches_nothing(wille_closure):
    pattern = GraphPattern(triples=((Var("s"), Var("p"), Var("o")),))
    empty = Ontology.empty()
    result = match_pattern(empty, subsumption_closure(empty), pattern)
    assert len(result) == 0


def test_constraint_variable_must_be_bound():
    with pytest.raises(PatternError):
        GraphPattern(
            triples=((Var("s"), RDF_TYPE, Var("c")),),
            constraints=(TypeConstraint(Var("zz"), Iri(SKOO + "Statement"), True),),
        )


def test_repeated_variable_in_one_triple():
    a, b = Iri(EX + "a"), Iri(EX + "b")
    p = Iri(EX + "p")
    graph = Ontology(abox=frozenset({relation(a, p, a), relation(a, p, b)}))
    closure = subsumption_closure(graph)
    pattern = GraphPattern(triples=((Var("x"), p, Var("x")),))
    result = match_pattern(graph, closure, pattern)
    assert result.rows == ((a,),)


def test_join_across_triples(wille_merged, wille_closure):
    pattern = GraphPattern(
        triples=(
            (Var("k"), Iri(SKOO + "isAbout"), Var("d")),
            (Var("n"), Iri(SKOO + "denotes"), Var("d")),
        )
    )
    result = match_pattern(wille_merged, wille_closure, pattern)
    assert result.rows == (
        (Iri(EX + "thm38"), Iri(EX + "momentumCompaction"), Iri(EX + "notationAlphaP")),
    )


def test_result_order_is_deterministic(wille_merged, wille_closure):
    pattern = GraphPattern(triples=((Var("s"), RDF_TYPE, Var("c")),))
    first = match_pattern(wille_merged, wille_closure, pattern)
    second = match_pattern(wille_merged, wille_closure, pattern)
    assert first == second
    values = [row[0].value for row in first.rows]
    assert values == sorted(values)


def test_monotone_matching(wille_merged, wille_closure):
    pattern = GraphPattern(triples=((Var("s"), RDF_TYPE, Var("c")),))
    before = set(match_pattern(wille_merged, wille_closure, pattern).rows)
    from skoo.model import add_assertion

    grown = add_assertion(
        wille_merged, type_of(Iri(EX + "newItem"), Iri(SKOO + "Lemma"))
    )
    after = set(match_pattern(grown, wille_closure, pattern).rows)
    assert before <= after


def test_matcher_agrees_with_naive_enumeration():
    rng = random.Random(20260809)
    for case in range(40):
        graph, pattern = random_match_case(rng)
        closure = subsumption_closure(graph)
        fast = set(match_pattern(graph, closure, pattern).rows)
        slow = naive_match(graph, pattern)
        assert fast == slow, f"case {case}"
