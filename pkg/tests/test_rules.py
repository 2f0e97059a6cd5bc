import json

import pytest

from skoo.model import Iri, Ontology, PrefixMap, type_of
from skoo.reasoner import subsumption_closure
from skoo.rules import (
    DanglingEdgeError,
    RuleConflictError,
    RuleParseError,
    apply_rules,
    default_ruleset,
    parse_ruleset,
    style_token,
)
from skoo.visual import VisualModel

SKOO = "http://purl.org/net/skoo#"
EX = "http://example.org/wille-ch3#"


def test_default_ruleset_has_four_rules():
    rules = default_ruleset()
    assert [r.name for r in rules] == [
        "statement-node",
        "proves-edge",
        "expressed-by-attach",
        "about-edge",
    ]


def test_empty_ruleset():
    assert parse_ruleset("[]") == []


def test_unbound_emit_variable_is_named_in_error():
    text = json.dumps(
        [
            {
                "name": "broken",
                "where": {"triples": [["?s", "a", "?c"]]},
                "emit": [{"kind": "node", "id": "{?z}", "label": "x", "class": "k"}],
            }
        ]
    )
    with pytest.raises(RuleParseError, match=r"\?z"):
        parse_ruleset(text)


def test_unknown_element_kind_rejected():
    text = json.dumps(
        [
            {
                "name": "broken",
                "where": {"triples": [["?s", "a", "?c"]]},
                "emit": [{"kind": "blob", "id": "{?s}", "label": "x", "class": "k"}],
            }
        ]
    )
    with pytest.raises(RuleParseError, match="blob"):
        parse_ruleset(text)


def test_unknown_template_filter_rejected():
    text = json.dumps(
        [
            {
                "name": "broken",
                "where": {"triples": [["?s", "a", "?c"]]},
                "emit": [{"kind": "node", "id": "{?s|upper}", "label": "x", "class": "k"}],
            }
        ]
    )
    with pytest.raises(RuleParseError, match="upper"):
        parse_ruleset(text)


def test_style_token():
    assert style_token(Iri(SKOO + "Domain_Object")) == "domain-object"
    assert style_token(Iri(SKOO + "Theorem")) == "theorem"


def test_default_rules_on_wille_fixture(wille_model):
    assert len(wille_model.nodes) == 5
    assert len(wille_model.edges) == 3
    assert {n.style_class for n in wille_model.nodes} == {
        "law",
        "equation",
        "theorem",
        "notation",
        "domain-object",
    }
    node_ids = {n.id for n in wille_model.nodes}
    assert "ex:thm38" in node_ids
    for edge in wille_model.edges:
        assert edge.src in node_ids and edge.dst in node_ids


def test_empty_ruleset_yields_empty_model(wille_merged, wille_closure):
    model = apply_rules(wille_merged, wille_closure, [])
    assert model == VisualModel()


def test_edge_rule_without_node_rule_dangles(wille_merged, wille_closure):
    rules = [r for r in default_ruleset() if r.name == "expressed-by-attach"]
    # strip the node emit, keep only the edge emit
    from skoo.rules import MappingRule

    only_edges = [
        MappingRule(
            name=r.name,
            triples=r.triples,
            types=r.types,
            emit=tuple(t for t in r.emit if t.kind == "edge"),
        )
        for r in rules
    ]
    with pytest.raises(DanglingEdgeError):
        apply_rules(wille_merged, wille_closure, only_edges)


def test_identical_reemission_is_noop(wille_merged, wille_closure):
    rules = default_ruleset() + default_ruleset()
    model = apply_rules(wille_merged, wille_closure, rules)
    assert len(model.nodes) == 5
    assert len(model.edges) == 3


def test_conflicting_reemission_is_an_error():
    ex = "http://example.org/g#"
    a, k = Iri(ex + "a"), Iri(ex + "K")
    graph = Ontology(
        prefixes=PrefixMap({"g": ex}),
        abox=frozenset({type_of(a, k)}),
        declared_classes=frozenset({k}),
    )
    closure = subsumption_closure(graph)
    text = json.dumps(
        [
            {
                "name": "one",
                "where": {"triples": [["?s", "a", "?c"]]},
                "emit": [{"kind": "node", "id": "{?s}", "label": "first", "class": "k"}],
            },
            {
                "name": "two",
                "where": {"triples": [["?s", "a", "?c"]]},
                "emit": [{"kind": "node", "id": "{?s}", "label": "second", "class": "k"}],
            },
        ]
    )
    with pytest.raises(RuleConflictError):
        apply_rules(graph, closure, parse_ruleset(text))


def test_rule_order_does_not_change_element_sets(wille_merged, wille_closure):
    rules = default_ruleset()
    forward = apply_rules(wille_merged, wille_closure, rules)
    backward = apply_rules(wille_merged, wille_closure, list(reversed(rules)))
    assert set(forward.nodes) == set(backward.nodes)
    assert set(forward.edges) == set(backward.edges)


def test_apply_is_deterministic(wille_merged, wille_closure):
    from skoo.visual import to_json

    a = apply_rules(wille_merged, wille_closure, default_ruleset())
    b = apply_rules(wille_merged, wille_closure, default_ruleset())
    assert to_json(a) == to_json(b)


def test_type_constraint_var_must_be_bound_at_parse_time():
    text = json.dumps(
        [
            {
                "name": "broken",
                "where": {
                    "triples": [["?s", "a", "?c"]],
                    "types": [{"var": "?other", "class": "skoo:Statement", "transitive": True}],
                },
                "emit": [],
            }
        ]
    )
    with pytest.raises(RuleParseError, match="other"):
        parse_ruleset(text)
