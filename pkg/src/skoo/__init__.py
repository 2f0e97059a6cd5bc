"""Scientific knowledge object graphs: parsing, reasoning, transformation.

The package turns Turtle-encoded knowledge graphs into checked, explorable
visual models: `turtle` reads and writes the carrier format, `reasoner`
computes subsumption and consistency, `bundle` ships the class schema and
its external correspondences, `patterns`/`rules` map instance graphs to the
abstract visual model in `visual`, and `cli`/`service` expose the pipeline.
"""

from .bundle import (
    SchemaBundle,
    ValidationReport,
    alignment_axioms,
    external_fragment,
    import_domain_ontology,
    load_bundle,
    skoo_ontology,
    validate_instance_graph,
)
from .model import (
    Assertion,
    AssertionKind,
    Axiom,
    AxiomKind,
    Iri,
    Ontology,
    PrefixMap,
    SkooError,
    add_axiom,
    merge,
)
from .patterns import BindingSet, GraphPattern, TypeConstraint, Var, match_pattern
from .reasoner import (
    CLOSURE_BACKEND,
    ConsistencyReport,
    SubsumptionClosure,
    check_consistency,
    infer_types,
    is_subclass_of,
    subsumption_closure,
)
from .rules import MappingRule, apply_rules, default_ruleset, parse_ruleset
from .turtle import ParseDiagnostic, TurtleParseError, parse_turtle, parse_turtle_tolerant, serialize_turtle
from .visual import (
    VisEdge,
    VisNode,
    VisualModel,
    class_tree,
    from_json,
    to_dot,
    to_json,
    validate_visual_model,
)

__version__ = "0.1.0"

__all__ = [
    "Assertion",
    "AssertionKind",
    "Axiom",
    "AxiomKind",
    "BindingSet",
    "CLOSURE_BACKEND",
    "ConsistencyReport",
    "GraphPattern",
    "Iri",
    "MappingRule",
    "Ontology",
    "ParseDiagnostic",
    "PrefixMap",
    "SchemaBundle",
    "SkooError",
    "SubsumptionClosure",
    "TurtleParseError",
    "TypeConstraint",
    "ValidationReport",
    "Var",
    "VisEdge",
    "VisNode",
    "VisualModel",
    "add_axiom",
    "alignment_axioms",
    "apply_rules",
    "check_consistency",
    "class_tree",
    "default_ruleset",
    "external_fragment",
    "from_json",
    "import_domain_ontology",
    "infer_types",
    "is_subclass_of",
    "load_bundle",
    "match_pattern",
    "merge",
    "parse_ruleset",
    "parse_turtle",
    "parse_turtle_tolerant",
    "serialize_turtle",
    "skoo_ontology",
    "subsumption_closure",
    "to_dot",
    "to_json",
    "validate_visual_model",
    "validate_instance_graph",
]
