"""Command-line entry point: check, validate, viz, serve.

Exit codes are a stable contract: 0 success, 1 domain failure (inconsistent
ontology, invalid instance graph, rule conflicts, dangling edges), 2 usage
or I/O failure (missing files, parse errors, bad flags).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from .bundle import (
    FRAGMENT_NAMES,
    SCHEMA_FILES,
    SchemaBundle,
    load_bundle,
    schema_bytes,
    validate_instance_graph,
)
from .model import Ontology, SkooError, merge
from .reasoner import check_consistency, subsumption_closure
from .rules import RuleError, RuleParseError, apply_rules, default_ruleset, parse_ruleset
from .service import build_snapshot, make_server
from .turtle import TurtleParseError, parse_turtle
from .visual import to_dot, to_json


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


def _schema_dir() -> Path:
    """Embedded schema directory, or the SKOO_SCHEMA_DIR override once it is
    proven byte-identical to the embedded copy."""
    override = os.environ.get("SKOO_SCHEMA_DIR")
    embedded = Path(str(resources.files("skoo").joinpath("schema")))
    if not override:
        return embedded
    root = Path(override)
    for name in SCHEMA_FILES:
        candidate = root / name
        try:
            data = candidate.read_bytes()
        except OSError as exc:
            raise CliFailure(2, f"SKOO_SCHEMA_DIR: cannot read {candidate}: {exc}") from exc
        if data != schema_bytes(name):
            raise CliFailure(
                2, f"SKOO_SCHEMA_DIR: {candidate} differs from the embedded schema"
            )
    return root


def _read_input(path_text: str, schema_dir: Path) -> Ontology:
    path = Path(path_text)
    if not path.exists():
        fallback = schema_dir / path_text
        if fallback.exists():
            path = fallback
        else:
            raise CliFailure(2, f"no such input file: {path_text}")
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        raise CliFailure(2, f"cannot read {path}: {exc}") from exc
    try:
        return parse_turtle(text)
    except TurtleParseError as exc:
        details = "\n".join(f"  {path}:{d}" for d in exc.diagnostics)
        raise CliFailure(2, f"parse failure in {path}:\n{details}") from exc


def _fragments(bundle: SchemaBundle, spec_text: str | None) -> list[Ontology]:
    if not spec_text:
        return []
    names = list(FRAGMENT_NAMES) if spec_text == "all" else spec_text.split(",")
    out = []
    for name in names:
        name = name.strip()
        if name not in FRAGMENT_NAMES:
            raise CliFailure(2, f"unknown fragment {name!r}; pick from {', '.join(FRAGMENT_NAMES)} or 'all'")
        out.append(bundle.fragment(name))
    return out


def _assemble(args: argparse.Namespace, bundle: SchemaBundle, schema_dir: Path) -> Ontology:
    parts = [bundle.skoo]
    parts.extend(_fragments(bundle, args.fragments))
    if args.alignment:
        parts.append(bundle.alignment_ontology)
    parts.extend(_read_input(p, schema_dir) for p in args.inputs)
    try:
        return merge(*parts)
    except SkooError as exc:
        raise CliFailure(2, f"cannot merge inputs: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text, "utf-8")
        except OSError as exc:
            raise CliFailure(2, f"cannot write {out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def _print_report(data: dict) -> None:
    sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def cmd_check(args: argparse.Namespace) -> int:
    schema_dir = _schema_dir()
    bundle = load_bundle()
    merged = _assemble(args, bundle, schema_dir)
    report = check_consistency(merged)
    _print_report(report.to_json_dict())
    return 0 if report.consistent else 1


def cmd_validate(args: argparse.Namespace) -> int:
    schema_dir = _schema_dir()
    bundle = load_bundle()
    graphs = [_read_input(p, schema_dir) for p in args.inputs]
    try:
        graph = merge(*graphs) if graphs else Ontology.empty()
    except SkooError as exc:
        raise CliFailure(2, f"cannot merge inputs: {exc}") from exc
    extra = tuple(_fragments(bundle, args.fragments))
    if args.alignment:
        extra = extra + (bundle.alignment_ontology,)
    report = validate_instance_graph(graph, bundle, extra=extra)
    _print_report(report.to_json_dict())
    return 0 if report.error_count == 0 else 1


def _load_rules(spec_text: str | None) -> list:
    if not spec_text or spec_text == "default":
        return default_ruleset()
    path = Path(spec_text)
    if not path.exists():
        raise CliFailure(2, f"no such rule file: {spec_text}")
    try:
        return parse_ruleset(path.read_text("utf-8"))
    except RuleParseError as exc:
        raise CliFailure(1, f"rule file {path}: {exc}") from exc


def _pick_format(args: argparse.Namespace) -> str:
    ext_format = None
    if args.out:
        suffix = Path(args.out).suffix.lower()
        ext_format = {".dot": "dot", ".json": "json"}.get(suffix)
    if args.format:
        if ext_format and args.format != ext_format:
            raise CliFailure(
                2, f"--format {args.format} contradicts output extension of {args.out}"
            )
        return args.format
    return ext_format or "dot"


def _build_model(args: argparse.Namespace):
    schema_dir = _schema_dir()
    bundle = load_bundle()
    merged = _assemble(args, bundle, schema_dir)
    closure = subsumption_closure(merged)
    rules = _load_rules(args.rules)
    try:
        model = apply_rules(merged, closure, rules)
    except RuleError as exc:
        raise CliFailure(1, str(exc)) from exc
    return merged, model


def cmd_viz(args: argparse.Namespace) -> int:
    fmt = _pick_format(args)
    _, model = _build_model(args)
    body = to_dot(model) if fmt == "dot" else to_json(model) + "\n"
    _emit(body, args.out)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    merged, model = _build_model(args)
    snapshot = build_snapshot(model, merged)
    static_dir = Path(str(resources.files("skoo").joinpath("static")))
    try:
        server = make_server(snapshot, static_dir, host=args.host, port=args.port)
    except OSError as exc:
        raise CliFailure(2, f"cannot bind {args.host}:{args.port}: {exc}") from exc
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def _add_pipeline_options(parser: argparse.ArgumentParser, with_rules: bool = False) -> None:
    parser.add_argument(
        "--fragments",
        metavar="LIST",
        help=f"comma-separated subset of {{{','.join(FRAGMENT_NAMES)}}} or 'all'",
    )
    parser.add_argument("--alignment", action="store_true", help="include the correspondence axioms")
    if with_rules:
        parser.add_argument("--rules", metavar="FILE", help="mapping rule file, or 'default'")
    parser.add_argument("inputs", nargs="*", metavar="INPUT", help="Turtle input files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skoo",
        description="Parse, check and visualize scientific knowledge object graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="merge and check consistency")
    _add_pipeline_options(p_check)
    p_check.set_defaults(func=cmd_check)

    p_validate = sub.add_parser("validate", help="validate instance graphs against the schema")
    _add_pipeline_options(p_validate)
    p_validate.set_defaults(func=cmd_validate)

    p_viz = sub.add_parser("viz", help="transform a knowledge graph into a visual model")
    _add_pipeline_options(p_viz, with_rules=True)
    p_viz.add_argument("--format", choices=("dot", "json"), help="output format")
    p_viz.add_argument("--out", metavar="FILE", help="output path (default: stdout)")
    p_viz.set_defaults(func=cmd_viz)

    p_serve = sub.add_parser("serve", help="serve the visual model and viewer over HTTP")
    _add_pipeline_options(p_serve, with_rules=True)
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print(f"skoo: {exc.message}", file=sys.stderr)
        return exc.code
    except SkooError as exc:
        print(f"skoo: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
