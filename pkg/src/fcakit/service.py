"""Small HTTP facade over contexts, lattices, bases, reports, and sessions.

In-memory store (optionally mirrored to a JSON directory); optimistic
concurrency on sessions via the X-Expected-Revision header. Run with
`fcakit serve` or `python -m fcakit.service`.
"""
from __future__ import annotations

import json
import os
import re
import threading
import uuid
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .context import FormalContext
from .errors import FcaError, InvalidCounterexample, ParseError, SessionError
from .exploration import (
    Accept,
    Counterexample,
    ExplorationSession,
    answer,
    load_session,
    new_session,
    save_session,
)
from .implications import canonical_base, implications_to_json
from .io import context_from_json, context_to_json, parse_cxt
from .lattice import build_lattice, lattice_to_json, top_part
from .testlab import failure_report

REVISION_HEADER = "X-Expected-Revision"


@dataclass
class SessionHandle:
    session: ExplorationSession
    revision: int
    lock: threading.Lock


class Store:
    """Contexts and sessions by id; read-modify-write is atomic per session."""

    def __init__(self, data_dir: str | None = None):
        self._contexts: dict[str, FormalContext] = {}
        self._sessions: dict[str, SessionHandle] = {}
        self._lock = threading.Lock()
        self.data_dir = data_dir
        if data_dir:
            os.makedirs(os.path.join(data_dir, "contexts"), exist_ok=True)
            os.makedirs(os.path.join(data_dir, "sessions"), exist_ok=True)
            self._load()

    def _load(self) -> None:
        cdir = os.path.join(self.data_dir, "contexts")
        for fname in sorted(os.listdir(cdir)):
            if fname.endswith(".json"):
                with open(os.path.join(cdir, fname), encoding="utf-8") as fh:
                    self._contexts[fname[:-5]] = context_from_json(json.load(fh))
        sdir = os.path.join(self.data_dir, "sessions")
        for fname in sorted(os.listdir(sdir)):
            if fname.endswith(".json"):
                with open(os.path.join(sdir, fname), encoding="utf-8") as fh:
                    doc = json.load(fh)
                handle = SessionHandle(
                    load_session(json.dumps(doc["session"])), doc["revision"], threading.Lock()
                )
                self._sessions[fname[:-5]] = handle

    def _persist_context(self, cid: str) -> None:
        if not self.data_dir:
            return
        path = os.path.join(self.data_dir, "contexts", cid + ".json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(context_to_json(self._contexts[cid]), fh)

    def _persist_session(self, sid: str) -> None:
        if not self.data_dir:
            return
        handle = self._sessions[sid]
        path = os.path.join(self.data_dir, "sessions", sid + ".json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(
                {"revision": handle.revision, "session": json.loads(save_session(handle.session))},
                fh,
            )

    def add_context(self, ctx: FormalContext) -> str:
        cid = uuid.uuid4().hex[:12]
        with self._lock:
            self._contexts[cid] = ctx
            self._persist_context(cid)
        return cid

    def context(self, cid: str) -> FormalContext | None:
        return self._contexts.get(cid)

    def add_session(self, session: ExplorationSession) -> str:
        sid = uuid.uuid4().hex[:12]
        with self._lock:
            self._sessions[sid] = SessionHandle(session, 0, threading.Lock())
            self._persist_session(sid)
        return sid

    def session(self, sid: str) -> SessionHandle | None:
        return self._sessions.get(sid)

    def mutate_session(self, sid: str, expected_revision: int, reply) -> tuple[int, dict]:
        """Apply an answer under the session lock; returns (status, body)."""
        handle = self._sessions.get(sid)
        if handle is None:
            return 404, {"error": f"unknown session {sid}"}
        with handle.lock:
            if expected_revision != handle.revision:
                return 409, {
                    "error": "revision mismatch",
                    "expected": expected_revision,
                    "current": handle.revision,
                }
            try:
                handle.session = answer(handle.session, reply)
            except InvalidCounterexample as exc:
                return 422, {"reason": exc.reason, "error": str(exc)}
            except SessionError as exc:
                return 409, {"error": str(exc)}
            handle.revision += 1
            self._persist_session(sid)
            return 200, session_state(sid, handle)


def session_state(sid: str, handle: SessionHandle) -> dict:
    s = handle.session
    state = {
        "id": sid,
        "revision": handle.revision,
        "phase": s.phase,
        "attributes": list(s.attributes),
        "question": None,
        "accepted": implications_to_json(s.accepted),
        "workingContext": context_to_json(s.working_context),
    }
    if s.question is not None:
        names = s.attributes
        state["question"] = {
            "premise": [names[i] for i in s.question.premise],
            "conclusion": [names[i] for i in s.question.conclusion],
            "text": s.question_text(),
        }
    if s.done:
        state["base"] = implications_to_json(s.accepted)
    return state


class _Handler(BaseHTTPRequestHandler):
    store: Store  # assigned by make_server

    # -- plumbing -------------------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default
        if os.environ.get("FCAKIT_SERVICE_LOG"):
            super().log_message(fmt, *args)

    def _send(self, status: int, body: dict | list) -> None:
        payload = json.dumps(body).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    def _body(self) -> bytes:
        length = int(self.headers.get("Content-Length") or 0)
        return self.rfile.read(length)

    # -- routes ---------------------------------------------------------------

    def do_GET(self):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        try:
            if len(parts) == 2 and parts[0] == "contexts":
                ctx = self.store.context(parts[1])
                if ctx is None:
                    return self._send(404, {"error": f"unknown context {parts[1]}"})
                return self._send(200, context_to_json(ctx))
            if len(parts) == 3 and parts[0] == "contexts" and parts[2] == "lattice":
                ctx = self.store.context(parts[1])
                if ctx is None:
                    return self._send(404, {"error": f"unknown context {parts[1]}"})
                query = parse_qs(url.query)
                if "depth" in query:
                    lat = top_part(ctx, int(query["depth"][0]))
                else:
                    lat = build_lattice(ctx)
                return self._send(200, lattice_to_json(lat))
            if len(parts) == 3 and parts[0] == "contexts" and parts[2] == "base":
                ctx = self.store.context(parts[1])
                if ctx is None:
                    return self._send(404, {"error": f"unknown context {parts[1]}"})
                return self._send(200, implications_to_json(canonical_base(ctx)))
            if len(parts) == 2 and parts[0] == "sessions":
                handle = self.store.session(parts[1])
                if handle is None:
                    return self._send(404, {"error": f"unknown session {parts[1]}"})
                return self._send(200, session_state(parts[1], handle))
            return self._send(404, {"error": f"no route for GET {url.path}"})
        except (FcaError, ValueError) as exc:
            return self._send(400, {"error": str(exc)})

    def do_POST(self):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        raw = self._body()
        try:
            if parts == ["contexts"]:
                return self._create_context(raw)
            if parts == ["reports", "failures"]:
                return self._failure_report(raw)
            if parts == ["sessions"]:
                return self._create_session(raw)
            if len(parts) == 3 and parts[0] == "sessions" and parts[2] == "answer":
                return self._post_answer(parts[1], raw)
            return self._send(404, {"error": f"no route for POST {url.path}"})
        except (FcaError, ValueError, KeyError) as exc:
            return self._send(400, {"error": str(exc)})

    def _create_context(self, raw: bytes) -> None:
        ctype = (self.headers.get("Content-Type") or "").split(";")[0].strip()
        try:
            if ctype == "text/plain":
                ctx = parse_cxt(raw.decode("utf-8"))
            else:
                ctx = context_from_json(json.loads(raw.decode("utf-8")))
        except (ParseError, json.JSONDecodeError, UnicodeDecodeError) as exc:
            return self._send(400, {"error": f"unparseable context: {exc}"})
        cid = self.store.add_context(ctx)
        return self._send(201, {"id": cid})

    def _failure_report(self, raw: bytes) -> None:
        body = json.loads(raw.decode("utf-8"))
        ctx = self.store.context(body.get("contextId", ""))
        if ctx is None:
            return self._send(404, {"error": "unknown context"})
        report = failure_report(ctx, body["failureAttr"], int(body.get("depth", 1)))
        return self._send(200, report.to_json())

    def _create_session(self, raw: bytes) -> None:
        body = json.loads(raw.decode("utf-8"))
        if "contextId" in body:
            ctx = self.store.context(body["contextId"])
            if ctx is None:
                return self._send(404, {"error": "unknown context"})
            session = new_session(initial=ctx)
        elif "attributes" in body:
            session = new_session(attributes=body["attributes"])
        else:
            return self._send(400, {"error": "need attributes or contextId"})
        sid = self.store.add_session(session)
        handle = self.store.session(sid)
        return self._send(201, session_state(sid, handle))

    def _post_answer(self, sid: str, raw: bytes) -> None:
        header = self.headers.get(REVISION_HEADER)
        if header is None or not re.fullmatch(r"\d+", header.strip()):
            return self._send(
                400, {"error": f"missing or malformed {REVISION_HEADER} header"}
            )
        body = json.loads(raw.decode("utf-8"))
        handle = self.store.session(sid)
        if handle is None:
            return self._send(404, {"error": f"unknown session {sid}"})
        if body.get("accept"):
            reply = Accept()
        elif "counterexample" in body:
            ce = body["counterexample"]
            attrs = handle.session.working_context.attr_set(ce.get("attrs", []))
            reply = Counterexample(str(ce["name"]), attrs)
        else:
            return self._send(400, {"error": "need accept or counterexample"})
        status, out = self.store.mutate_session(sid, int(header.strip()), reply)
        return self._send(status, out)


def make_server(port: int = 7878, data_dir: str | None = None) -> ThreadingHTTPServer:
    store = Store(data_dir)
    handler = type("BoundHandler", (_Handler,), {"store": store})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def run_server(port: int = 7878, data_dir: str | None = None) -> None:
    server = make_server(port, data_dir)
    host, actual_port = server.server_address[:2]
    print(f"fcakit service on http://{host}:{actual_port}/ (Ctrl-C stops)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


if __name__ == "__main__":
    import argparse

    ap = argparse.ArgumentParser(description="fcakit HTTP service")
    ap.add_argument("--port", type=int, default=7878)
    ap.add_argument("--data-dir", default=None)
    ns = ap.parse_args()
    run_server(ns.port, ns.data_dir)
