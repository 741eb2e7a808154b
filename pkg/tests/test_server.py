import json
import threading
import urllib.error
import urllib.request

import pytest

from popkit.server import make_server, resolve_port

FIG1_LEFT = {"format_version": "1",
             "vertices": [["2", "0"], ["0", "3"], ["-3", "0"],
                          ["0", "-2"], ["-1", "0"], ["0", "1"]]}
SQUARE = {"vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]}
HAIRPIN = {"vertices": [["0", "0"], ["1", "0"], ["2", "1"], ["1", "0"]]}


@pytest.fixture(scope="module")
def service():
    server = make_server(port=0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{port}"
    server.shutdown()
    server.server_close()


def get(base, path):
    try:
        with urllib.request.urlopen(base + path) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as err:
        return err.code, err.read()


def post(base, path, obj):
    req = urllib.request.Request(base + path, data=json.dumps(obj).encode(),
                                 headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as err:
        return err.code, err.read()


def test_health(service):
    assert get(service, "/health") == (200, b'{"status":"ok"}\n')


def test_unknown_path_404(service):
    assert get(service, "/zap")[0] == 404
    assert post(service, "/polygon/zap", {})[0] == 404


def test_pop_fig2_first_move(service):
    status, body = post(service, "/polygon/pop", {"polygon": FIG1_LEFT, "vertex": 1})
    assert status == 200
    result = json.loads(body)
    assert result["polygon"]["vertices"][1] == ["0", "-3"]
    assert result["polygon"]["vertices"][0] == ["2", "0"]


def test_popturn(service):
    status, body = post(service, "/polygon/popturn", {"polygon": FIG1_LEFT, "vertex": 1})
    assert status == 200
    assert json.loads(body)["polygon"]["vertices"][1] == ["-1", "-3"]


def test_hairpin_pop_is_422(service):
    status, body = post(service, "/polygon/pop", {"polygon": HAIRPIN, "vertex": 0})
    assert status == 422
    assert body == b'{"error":"hairpin"}\n'


def test_check_square(service):
    status, body = post(service, "/polygon/check", {"polygon": SQUARE})
    assert status == 200
    report = json.loads(body)
    assert report["simple"] is True and report["convex"] is True


def test_pockets(service):
    dent = {"vertices": [["0", "0"], ["4", "0"], ["4", "4"], ["2", "3"], ["0", "4"]]}
    status, body = post(service, "/polygon/pockets", {"polygon": dent})
    assert status == 200
    assert json.loads(body) == {"pockets": [{"lid": [2, 4], "chain": [3]}]}


def test_flip_by_index(service):
    dent = {"vertices": [["0", "0"], ["4", "0"], ["4", "4"], ["2", "3"], ["0", "4"]]}
    status, body = post(service, "/polygon/flip", {"polygon": dent, "pocket_index": 0})
    assert status == 200
    assert json.loads(body)["polygon"]["vertices"][3] == ["2", "5"]
    status, body = post(service, "/polygon/flip", {"polygon": dent, "pocket_index": 3})
    assert status == 400
    assert json.loads(body)["field"] == "pocket_index"


def test_alternating_build(service):
    status, body = post(service, "/alternating/build",
                        {"x": "2,1", "y": "2,1", "sigma": "++--"})
    assert status == 200
    assert json.loads(body)["polygon"]["vertices"] == [
        ["2", "0"], ["0", "2"], ["-1", "0"], ["0", "-1"]]


def test_render_svg(service):
    status, body = post(service, "/render",
                        {"polygon": SQUARE, "options": {"canvas_size": 200}})
    assert status == 200
    assert body.startswith(b"<?xml")
    assert b'width="200"' in body


def test_malformed_body_400_with_field(service):
    status, body = post(service, "/polygon/pop", {"polygon": FIG1_LEFT})
    assert status == 400
    assert json.loads(body)["field"] == "vertex"

    bad = {"polygon": {"vertices": [["x", "0"], ["1", "0"], ["1", "1"]]}, "vertex": 0}
    status, body = post(service, "/polygon/pop", bad)
    assert status == 400
    assert json.loads(body)["field"] == "polygon.vertices[0][0]"

    status, body = post(service, "/polygon/pop", {"polygon": FIG1_LEFT, "vertex": "one"})
    assert status == 400
    assert json.loads(body)["field"] == "vertex"


def test_invalid_json_400(service):
    req = urllib.request.Request(service + "/polygon/check", data=b"{nope",
                                 headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req) as resp:
            status = resp.status
    except urllib.error.HTTPError as err:
        status = err.code
    assert status == 400


def test_responses_are_deterministic(service):
    first = post(service, "/polygon/pop", {"polygon": FIG1_LEFT, "vertex": 1})
    second = post(service, "/polygon/pop", {"polygon": FIG1_LEFT, "vertex": 1})
    assert first == second


def test_vertex_out_of_range_400(service):
    status, body = post(service, "/polygon/pop", {"polygon": SQUARE, "vertex": 9})
    assert status == 400
    assert "out of range" in json.loads(body)["error"]


def test_cors_headers_present(service):
    req = urllib.request.Request(service + "/health")
    with urllib.request.urlopen(req) as resp:
        assert resp.headers["Access-Control-Allow-Origin"] == "*"


def test_resolve_port(monkeypatch):
    monkeypatch.delenv("POPKIT_PORT", raising=False)
    assert resolve_port() == 8765
    assert resolve_port(1234) == 1234
    monkeypatch.setenv("POPKIT_PORT", "4321")
    assert resolve_port() == 4321
    assert resolve_port(1234) == 1234
