#!/usr/bin/env python3
"""Regenerate the UI test fixtures from the real CLI and HTTP service.

Run from anywhere with the popkit package installed:

    python3 frontend/scripts/gen_fixtures.py

Writes: frontend/fixtures/*.json. The documents are literal CLI output
bytes; transcript.json records real service responses keyed by the exact
request bodies the client produces, so the vitest suite exercises genuine
wire data without needing a live server.
"""

import json
import subprocess
import sys
import threading
import urllib.error
import urllib.request
from pathlib import Path

from popkit.document import encode
from popkit.polygon import Polygon
from popkit.server import make_server

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def cli(args, stdin=b""):
    proc = subprocess.run([sys.executable, "-m", "popkit.cli", *args],
                          input=stdin, capture_output=True)
    if proc.returncode != 0:
        raise SystemExit(f"cli {args} failed: {proc.stderr.decode()}")
    return proc.stdout


def client_body(obj) -> str:
    # exactly what JSON.stringify produces on the client
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)

    fig2 = cli(["gen", "alternating", "--x", "2,3,1", "--y", "3,2,1",
                "--sigma", "++---+"])
    after1 = cli(["apply", "pop", "--vertex", "1"], fig2)
    after10 = cli(["apply", "pop", "--vertex", "0"], after1)
    after105 = cli(["apply", "pop", "--vertex", "5"], after10)
    hairpin = encode(Polygon([(0, 0), (1, 0), (2, 1), (1, 0)]))

    docs = {
        "fig2-start.json": fig2,
        "after-pop-1.json": after1,
        "after-pop-1-0.json": after10,
        "after-pop-1-0-5.json": after105,
        "hairpin.json": hairpin,
    }
    for name, data in docs.items():
        (FIXTURES / name).write_bytes(data)

    server = make_server(port=0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()

    entries = []

    def record(path, body):
        req = urllib.request.Request(
            f"http://127.0.0.1:{port}{path}", data=body.encode("utf-8"),
            headers={"Content-Type": "application/json"})
        try:
            with urllib.request.urlopen(req) as resp:
                status, text = resp.status, resp.read().decode("utf-8")
        except urllib.error.HTTPError as err:
            status, text = err.code, err.read().decode("utf-8")
        entries.append({"path": path, "body": body, "status": status,
                        "response": text})
        return text

    loads = json.loads
    record("/alternating/build",
           client_body({"x": "2,3,1", "y": "3,2,1", "sigma": "++---+"}))
    record("/polygon/pop", client_body({"polygon": loads(fig2), "vertex": 1}))
    record("/polygon/pop", client_body({"polygon": loads(after1), "vertex": 0}))
    record("/polygon/pop", client_body({"polygon": loads(after10), "vertex": 5}))
    # second click on the same vertex (involution back to the start)
    record("/polygon/pop", client_body({"polygon": loads(after1), "vertex": 1}))
    popturn_resp = record("/polygon/popturn",
                          client_body({"polygon": loads(fig2), "vertex": 1}))
    record("/polygon/pop", client_body({"polygon": loads(hairpin), "vertex": 0}))

    popturned = json.dumps(loads(popturn_resp)["polygon"],
                           separators=(",", ":"), ensure_ascii=False) + "\n"
    for text in (fig2, after1, after10, after105, hairpin, popturned.encode()):
        record("/polygon/check", client_body({"polygon": loads(text)}))

    server.shutdown()
    server.server_close()

    payload = json.dumps({"entries": entries}, indent=2, ensure_ascii=False) + "\n"
    (FIXTURES / "transcript.json").write_text(payload, encoding="utf-8")
    print(f"wrote {len(docs)} documents and {len(entries)} transcript entries "
          f"to {FIXTURES}")


if __name__ == "__main__":
    main()
