"""Read-only HTTP facade over one immutable pipeline snapshot.

Everything is computed when the snapshot is built; request handling only
selects precomputed or deterministically derived bytes, so identical GETs
always return identical bodies and concurrent readers need no locking.
"""

from __future__ import annotations

import json
import mimetypes
import posixpath
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, unquote, urlparse

from .model import Ontology
from .visual import VisEdge, VisNode, VisualModel, _node_dict, _tree_dict, class_tree, to_json


@dataclass(frozen=True)
class Snapshot:
    model: VisualModel
    model_body: bytes
    classes_body: bytes
    nodes_by_id: dict[str, VisNode]
    incident: dict[str, tuple[VisEdge, ...]]


def build_snapshot(model: VisualModel, tbox_source: Ontology) -> Snapshot:
    tree = class_tree(tbox_source)
    incident: dict[str, list[VisEdge]] = {}
    for edge in model.edges:
        incident.setdefault(edge.src, []).append(edge)
        if edge.dst != edge.src:
            incident.setdefault(edge.dst, []).append(edge)
    return Snapshot(
        model=model,
        model_body=(to_json(model) + "\n").encode("utf-8"),
        classes_body=(
            json.dumps(_tree_dict(tree), separators=(",", ":"), ensure_ascii=False) + "\n"
        ).encode("utf-8"),
        nodes_by_id={n.id: n for n in model.nodes},
        incident={k: tuple(sorted(v, key=lambda e: e.id)) for k, v in incident.items()},
    )


def _json_bytes(data: object) -> bytes:
    return (json.dumps(data, separators=(",", ":"), ensure_ascii=False) + "\n").encode("utf-8")


class _Handler(BaseHTTPRequestHandler):
    snapshot: Snapshot
    static_dir: Path

    def log_message(self, format: str, *args: object) -> None:  # noqa: A002
        pass  # keep test output quiet

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, body: bytes) -> None:
        self._send(status, body, "application/json; charset=utf-8")

    def do_GET(self) -> None:  # noqa: N802
        url = urlparse(self.path)
        path = url.path
        if path == "/api/model":
            self._send_json(200, self.snapshot.model_body)
        elif path == "/api/classes":
            self._send_json(200, self.snapshot.classes_body)
        elif path.startswith("/api/node/"):
            self._node(unquote(path[len("/api/node/"):]))
        elif path == "/api/search":
            self._search(parse_qs(url.query))
        elif path.startswith("/api/"):
            self._send_json(404, _json_bytes({"error": "unknown endpoint"}))
        else:
            self._static(path)

    def _node(self, node_id: str) -> None:
        node = self.snapshot.nodes_by_id.get(node_id)
        if node is None:
            self._send_json(404, _json_bytes({"error": f"unknown node id {node_id!r}"}))
            return
        edges = self.snapshot.incident.get(node_id, ())
        neighbor_ids = sorted(
            ({e.src for e in edges} | {e.dst for e in edges}) - {node_id}
        )
        neighbors = [
            self.snapshot.nodes_by_id[i]
            for i in neighbor_ids
            if i in self.snapshot.nodes_by_id
        ]
        body = {
            "nodes": [_node_dict(node)] + [_node_dict(n) for n in neighbors],
            "edges": [
                {"id": e.id, "from": e.src, "to": e.dst, "label": e.label} for e in edges
            ],
        }
        self._send_json(200, _json_bytes(body))

    def _search(self, query: dict[str, list[str]]) -> None:
        if "q" not in query:
            self._send_json(400, _json_bytes({"error": "missing query parameter 'q'"}))
            return
        needle = query["q"][0].lower()
        hits = [
            _node_dict(n)
            for n in sorted(self.snapshot.model.nodes, key=lambda n: n.id)
            if needle in n.label.lower()
        ]
        self._send_json(200, _json_bytes(hits))

    def _static(self, path: str) -> None:
        clean = posixpath.normpath(unquote(path))
        if clean in ("/", "."):
            clean = "/index.html"
        if clean.startswith("..") or "/../" in clean:
            self._send(404, b"not found\n", "text/plain; charset=utf-8")
            return
        candidate = self.static_dir / clean.lstrip("/")
        if not candidate.is_file():
            self._send(404, b"not found\n", "text/plain; charset=utf-8")
            return
        content_type = mimetypes.guess_type(candidate.name)[0] or "application/octet-stream"
        if content_type.startswith("text/") or content_type == "application/javascript":
            content_type += "; charset=utf-8"
        self._send(200, candidate.read_bytes(), content_type)


def make_server(
    snapshot: Snapshot, static_dir: Path, host: str = "127.0.0.1", port: int = 8000
) -> ThreadingHTTPServer:
    handler = type("SnapshotHandler", (_Handler,), {"snapshot": snapshot, "static_dir": static_dir})
    return ThreadingHTTPServer((host, port), handler)
