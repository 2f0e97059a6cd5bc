import json
import threading
from urllib.request import urlopen
from urllib.error import HTTPError

import pytest

from skoo.service import build_snapshot, make_server
from skoo.visual import to_json


@pytest.fixture(scope="module")
def server(wille_model, wille_merged, tmp_path_factory):
    static = tmp_path_factory.mktemp("static")
    (static / "index.html").write_text("<html><body>viewer</body></html>")
    snapshot = build_snapshot(wille_model, wille_merged)
    srv = make_server(snapshot, static, port=0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{srv.server_address[1]}"
    srv.shutdown()
    srv.server_close()


def get(url: str) -> tuple[int, bytes]:
    try:
        with urlopen(url) as response:
            return response.status, response.read()
    except HTTPError as exc:
        return exc.code, exc.read()


def test_model_endpoint_matches_viz_bytes(server, wille_model):
    status, body = get(f"{server}/api/model")
    assert status == 200
    assert body == (to_json(wille_model) + "\n").encode()


def test_identical_gets_identical_bytes(server):
    assert get(f"{server}/api/model") == get(f"{server}/api/model")
    assert get(f"{server}/api/classes") == get(f"{server}/api/classes")


def test_classes_endpoint_serves_tree(server):
    status, body = get(f"{server}/api/classes")
    assert status == 200
    tree = json.loads(body)
    assert tree["root"] == "owl:Thing"
    assert "skoo:Sci_Knowledge_Item" in tree["children"]["owl:Thing"]


def test_node_endpoint_returns_neighborhood(server):
    status, body = get(f"{server}/api/node/ex:thm38")
    assert status == 200
    data = json.loads(body)
    ids = [n["id"] for n in data["nodes"]]
    assert ids[0] == "ex:thm38"
    assert "ex:momentumCompaction" in ids
    assert len(data["edges"]) == 1
    assert data["edges"][0]["label"] == "is about"


def test_node_endpoint_404_for_unknown_id(server):
    status, body = get(f"{server}/api/node/ex:nothing")
    assert status == 404
    assert "error" in json.loads(body)


def test_search_hits(server):
    status, body = get(f"{server}/api/search?q=DISPERSION")
    assert status == 200
    hits = json.loads(body)
    assert [h["id"] for h in hits] == ["ex:dispersionLaw", "ex:eqDispersion"]


def test_search_no_hits(server):
    status, body = get(f"{server}/api/search?q=zzz")
    assert status == 200
    assert json.loads(body) == []


def test_search_requires_query(server):
    status, _ = get(f"{server}/api/search")
    assert status == 400


def test_unknown_api_path_404(server):
    status, _ = get(f"{server}/api/bogus")
    assert status == 404


def test_static_index(server):
    status, body = get(f"{server}/")
    assert status == 200
    assert b"viewer" in body


def test_static_missing_file_404(server):
    status, _ = get(f"{server}/nope.css")
    assert status == 404


def test_path_traversal_is_blocked(server):
    status, _ = get(f"{server}/../pyproject.toml")
    assert status == 404
