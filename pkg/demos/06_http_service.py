"""Drive the HTTP facade end to end: upload a context, fetch its lattice
and base, and walk an exploration session over the wire."""
import json
import os
import threading
import urllib.request

from fcakit.service import make_server

HERE = os.path.dirname(__file__)

server = make_server(port=0)
threading.Thread(target=server.serve_forever, daemon=True).start()
base_url = f"http://127.0.0.1:{server.server_address[1]}"
print("service at", base_url)


def call(method, path, body=None, content_type="application/json", headers=None):
    data = None
    if body is not None:
        data = body.encode() if isinstance(body, str) else json.dumps(body).encode()
    req = urllib.request.Request(base_url + path, data=data, method=method)
    req.add_header("Content-Type", content_type)
    for k, v in (headers or {}).items():
        req.add_header(k, v)
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read().decode())


with open(os.path.join(HERE, "..", "fixtures", "figures.cxt"), encoding="utf-8") as fh:
    ctx_id = call("POST", "/contexts", fh.read(), content_type="text/plain")["id"]
print("uploaded context:", ctx_id)

lattice = call("GET", f"/contexts/{ctx_id}/lattice")
print(f"lattice: {len(lattice['concepts'])} concepts, {len(lattice['covers'])} covers")
print("base:", call("GET", f"/contexts/{ctx_id}/base"))

state = call("POST", "/sessions",
             {"attributes": ["even", "prime", "divided_by_three", "odd", "factorial"]})
print("\nsession", state["id"], "question:", state["question"]["text"])

state = call(
    "POST", f"/sessions/{state['id']}/answer",
    {"counterexample": {"name": "2", "attrs": ["even", "factorial", "prime"]}},
    headers={"X-Expected-Revision": str(state["revision"])},
)
print("after counterexample 2, question:", state["question"]["text"])

server.shutdown()
server.server_close()
