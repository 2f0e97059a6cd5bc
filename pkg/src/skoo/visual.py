"""The abstract visual model and its exporters.

The model is geometry-free on purpose: nodes, edges, trees, lists, texts
and shapes carry identities, labels and style tags, and layout is left to
whatever consumes the export (a DOT engine, or the browser viewer's force
layout). Exporters are pure and byte-deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .model import Iri, Ontology, AxiomKind, SkooError


class InvalidModelError(SkooError):
    def __init__(self, diagnostics: list["ModelDiagnostic"]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(d) for d in diagnostics))


@dataclass(frozen=True, slots=True)
class ModelDiagnostic:
    severity: str  # "error" | "warning"
    identity: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.identity}: {self.message}"


@dataclass(frozen=True, slots=True)
class VisNode:
    id: str
    label: str
    style_class: str
    payload: Iri | None = None


@dataclass(frozen=True, slots=True)
class VisEdge:
    id: str
    src: str
    dst: str
    label: str


@dataclass(frozen=True)
class VisTree:
    id: str
    root: str
    children: dict[str, tuple[str, ...]]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VisTree)
            and self.id == other.id
            and self.root == other.root
            and self.children == other.children
        )


@dataclass(frozen=True, slots=True)
class VisList:
    id: str
    items: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class VisText:
    id: str
    content: str


@dataclass(frozen=True, slots=True)
class VisShape:
    id: str
    shape: str  # "rect" | "ellipse" | "line"


@dataclass(frozen=True)
class VisualModel:
    nodes: tuple[VisNode, ...] = ()
    edges: tuple[VisEdge, ...] = ()
    trees: tuple[VisTree, ...] = ()
    lists: tuple[VisList, ...] = ()
    texts: tuple[VisText, ...] = ()
    shapes: tuple[VisShape, ...] = ()

    def all_ids(self) -> list[str]:
        out: list[str] = []
        for group in (self.nodes, self.edges, self.trees, self.lists, self.texts, self.shapes):
            out.extend(e.id for e in group)
        return out


def validate_visual_model(vm: VisualModel) -> list[ModelDiagnostic]:
    """Empty list iff the model invariants hold; one diagnostic (carrying
    the offending identity) per violation otherwise."""
    diagnostics: list[ModelDiagnostic] = []

    seen: set[str] = set()
    for identity in vm.all_ids():
        if not identity:
            diagnostics.append(ModelDiagnostic("error", identity, "empty element identity"))
        elif identity in seen:
            diagnostics.append(ModelDiagnostic("error", identity, "duplicate element identity"))
        seen.add(identity)

    node_ids = {n.id for n in vm.nodes}
    for edge in vm.edges:
        for endpoint in (edge.src, edge.dst):
            if endpoint not in node_ids:
                diagnostics.append(
                    ModelDiagnostic("error", edge.id, f"edge endpoint {endpoint!r} is not a node")
                )
        if edge.src == edge.dst:
            diagnostics.append(ModelDiagnostic("warning", edge.id, "self-loop"))

    for shape in vm.shapes:
        if shape.shape not in ("rect", "ellipse", "line"):
            diagnostics.append(
                ModelDiagnostic("error", shape.id, f"unknown shape kind {shape.shape!r}")
            )

    for tree in vm.trees:
        diagnostics.extend(_validate_tree(tree, node_ids))

    return diagnostics


def _validate_tree(tree: VisTree, node_ids: set[str]) -> list[ModelDiagnostic]:
    diagnostics: list[ModelDiagnostic] = []
    all_children = [c for kids in tree.children.values() for c in kids]
    referenced = set(tree.children) | set(all_children) | {tree.root}
    if node_ids:
        for ref in sorted(referenced):
            if ref not in node_ids:
                diagnostics.append(
                    ModelDiagnostic("error", tree.id, f"tree references {ref!r}, which is not a node")
                )
    if tree.root in all_children:
        diagnostics.append(ModelDiagnostic("error", tree.id, "root appears as a child"))
    if len(all_children) != len(set(all_children)):
        diagnostics.append(ModelDiagnostic("error", tree.id, "a node has two parents"))

    # Cycle / reachability walk from the root.
    visited: set[str] = set()
    stack = [tree.root]
    while stack:
        current = stack.pop()
        if current in visited:
            diagnostics.append(ModelDiagnostic("error", tree.id, "cycle in tree"))
            break
        visited.add(current)
        stack.extend(tree.children.get(current, ()))
    unreachable = set(tree.children) - visited
    if unreachable:
        diagnostics.append(
            ModelDiagnostic(
                "error", tree.id, f"unreachable from root: {sorted(unreachable)}"
            )
        )
    return diagnostics


def _ensure_valid(vm: VisualModel) -> None:
    problems = [d for d in validate_visual_model(vm) if d.severity == "error"]
    if problems:
        raise InvalidModelError(problems)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(vm: VisualModel) -> str:
    """A well-formed DOT digraph: one node statement per node, one edge
    statement per edge, ordered by id. Trees/lists/texts/shapes have no DOT
    rendering and are skipped."""
    _ensure_valid(vm)
    lines = ["digraph skoo {"]
    for node in sorted(vm.nodes, key=lambda n: n.id):
        attrs = f"label={_dot_quote(node.label)}, class={_dot_quote(node.style_class)}"
        lines.append(f"  {_dot_quote(node.id)} [{attrs}];")
    for edge in sorted(vm.edges, key=lambda e: e.id):
        attrs = f"label={_dot_quote(edge.label)}, id={_dot_quote(edge.id)}"
        lines.append(f"  {_dot_quote(edge.src)} -> {_dot_quote(edge.dst)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _node_dict(node: VisNode) -> dict:
    data: dict = {"id": node.id, "label": node.label, "class": node.style_class}
    if node.payload is not None:
        data["payload"] = node.payload.value
    return data


def _tree_dict(tree: VisTree) -> dict:
    return {
        "id": tree.id,
        "root": tree.root,
        "children": {parent: list(kids) for parent, kids in sorted(tree.children.items())},
    }


def model_dict(vm: VisualModel) -> dict:
    return {
        "nodes": [_node_dict(n) for n in vm.nodes],
        "edges": [
            {"id": e.id, "from": e.src, "to": e.dst, "label": e.label} for e in vm.edges
        ],
        "trees": [_tree_dict(t) for t in vm.trees],
        "lists": [{"id": l.id, "items": list(l.items)} for l in vm.lists],
        "texts": [{"id": t.id, "content": t.content} for t in vm.texts],
        "shapes": [{"id": s.id, "shape": s.shape} for s in vm.shapes],
    }


def to_json(vm: VisualModel) -> str:
    """Compact UTF-8 JSON with the field order fixed by the wire schema."""
    _ensure_valid(vm)
    return json.dumps(model_dict(vm), separators=(",", ":"), ensure_ascii=False)


def from_json(text: str) -> VisualModel:
    data = json.loads(text)
    return VisualModel(
        nodes=tuple(
            VisNode(
                id=n["id"],
                label=n["label"],
                style_class=n["class"],
                payload=Iri(n["payload"]) if "payload" in n else None,
            )
            for n in data.get("nodes", [])
        ),
        edges=tuple(
            VisEdge(id=e["id"], src=e["from"], dst=e["to"], label=e["label"])
            for e in data.get("edges", [])
        ),
        trees=tuple(
            VisTree(
                id=t["id"],
                root=t["root"],
                children={k: tuple(v) for k, v in t["children"].items()},
            )
            for t in data.get("trees", [])
        ),
        lists=tuple(
            VisList(id=l["id"], items=tuple(l["items"])) for l in data.get("lists", [])
        ),
        texts=tuple(VisText(id=t["id"], content=t["content"]) for t in data.get("texts", [])),
        shapes=tuple(VisShape(id=s["id"], shape=s["shape"]) for s in data.get("shapes", [])),
    )


def _cut_parent_cycles(parents: dict[Iri, Iri]) -> None:
    """Subclass cycles would make the display tree endless; drop the parent
    link of each cycle's smallest member (deterministic, rare in practice)."""
    changed = True
    while changed:
        changed = False
        for start in sorted(parents, key=lambda c: c.value):
            seen: list[Iri] = []
            current: Iri | None = start
            while current is not None and current in parents:
                if current in seen:
                    cycle = seen[seen.index(current):]
                    del parents[min(cycle, key=lambda c: c.value)]
                    changed = True
                    break
                seen.append(current)
                current = parents[current]
            if changed:
                break


SYNTHETIC_ROOT = "owl:Thing"


def class_tree(ontology: Ontology, tree_id: str = "class-hierarchy") -> VisTree:
    """The TBox as a tree for sidebar display. Classes with several direct
    superclasses hang under the lexicographically smallest one; parentless
    classes hang under a synthetic root when there is more than one."""
    classes = sorted(ontology.classes_in_use(), key=lambda c: c.value)
    parents: dict[Iri, Iri] = {}
    for ax in sorted(ontology.tbox, key=lambda a: (a.subject.value, a.object.value)):
        if ax.kind is AxiomKind.SUB_CLASS_OF and ax.subject != ax.object:
            if ax.subject not in parents or ax.object.value < parents[ax.subject].value:
                parents[ax.subject] = ax.object
    _cut_parent_cycles(parents)

    def ident(cls: Iri) -> str:
        return cls.curie(ontology.prefixes)

    children: dict[str, list[str]] = {}
    roots: list[str] = []
    for cls in classes:
        if cls in parents:
            children.setdefault(ident(parents[cls]), []).append(ident(cls))
        else:
            roots.append(ident(cls))

    if len(roots) == 1 and not children.get(SYNTHETIC_ROOT):
        root = roots[0]
    else:
        root = SYNTHETIC_ROOT
        children[SYNTHETIC_ROOT] = sorted(set(roots))

    return VisTree(
        id=tree_id,
        root=root,
        children={parent: tuple(sorted(kids)) for parent, kids in children.items()},
    )
