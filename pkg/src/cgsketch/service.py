"""Local message-based sketch service.

Transport: TCP, newline-delimited JSON, UTF-8, one session per connection.
On connect the server sends a handshake line carrying the protocol version
and the two panel pixel transforms; afterwards every request is answered by
exactly one event:

    request: {"op": ..., "seq": <int>, ...args}
    event:   {"in_reply_to": <seq>, "ok": <bool>, "status": <str>,
              "changed_nodes": [<render>...], ...extras}

Sequence numbers must be strictly increasing per session; a command that
fails changes nothing (scene mutations happen only after validation).
Renders carry world coordinates; clients project with the handshake's
affine maps and never re-implement geometry.
"""

from __future__ import annotations

import json
import socket
import socketserver
import threading
from pathlib import Path

from .errors import CgaError
from .scene import MSG_PICK_SPHERE, Scene, point_chosen
from .svg import export_svg

PROTOCOL_VERSION = 1


class SketchSession:
    """One scene plus the strictly-increasing command sequence."""

    def __init__(self, scene: Scene) -> None:
        self.scene = scene
        self.last_seq: int | None = None

    def handshake(self) -> dict:
        return {"protocol": PROTOCOL_VERSION,
                "panels": {name: view.describe()
                           for name, view in self.scene.panels.items()}}

    # ------------------------------------------------------------------
    def handle(self, message: dict) -> dict:
        if not isinstance(message, dict):
            return self._error(None, "malformed message: not an object")
        seq = message.get("seq")
        if not isinstance(seq, int):
            return self._error(None, "malformed message: missing integer seq")
        if self.last_seq is not None and seq <= self.last_seq:
            return self._error(
                seq, f"out-of-order seq {seq} (last was {self.last_seq})")
        op = message.get("op")
        handler = getattr(self, f"_op_{op}", None) if isinstance(op, str) else None
        if handler is None:
            return self._error(seq, f"unknown op {op!r}")
        try:
            event = handler(message)
        except (CgaError, ValueError, KeyError, TypeError) as exc:
            return self._error(seq, str(exc) or repr(exc))
        self.last_seq = seq
        event.setdefault("status", "")
        event.setdefault("changed_nodes", [])
        event["in_reply_to"] = seq
        event["ok"] = True
        return event

    @staticmethod
    def _error(seq, reason: str) -> dict:
        return {"in_reply_to": seq, "ok": False,
                "status": f"error: {reason}", "changed_nodes": []}

    # ------------------------------------------------------------------
    @staticmethod
    def _coords(message) -> tuple[float, float, float]:
        return (float(message["x"]), float(message["y"]), float(message["z"]))

    def _renders(self, ids) -> list[dict]:
        return [self.scene.render_node(i) for i in ids]

    def _op_create_point(self, message: dict) -> dict:
        node_id = self.scene.create_point(self._coords(message))
        return {"node": node_id, "changed_nodes": self._renders([node_id])}

    def _op_create_line(self, message: dict) -> dict:
        node_id = self.scene.create_line(int(message["p1"]), int(message["p2"]))
        return {"node": node_id, "changed_nodes": self._renders([node_id])}

    def _op_create_circle(self, message: dict) -> dict:
        node_id = self.scene.create_circle(int(message["p1"]), int(message["p2"]),
                                           int(message["p3"]))
        return {"node": node_id, "changed_nodes": self._renders([node_id])}

    def _op_create_sphere4(self, message: dict) -> dict:
        node_id = self.scene.create_sphere(int(message["p1"]), int(message["p2"]),
                                           int(message["p3"]), int(message["p4"]))
        return {"node": node_id, "changed_nodes": self._renders([node_id])}

    def _op_create_sphere_cr(self, message: dict) -> dict:
        node_id = self.scene.create_sphere_cr(int(message["center"]),
                                              float(message["radius"]))
        return {"node": node_id, "changed_nodes": self._renders([node_id])}

    def _op_move_point(self, message: dict) -> dict:
        changed = self.scene.move_point(int(message["id"]), self._coords(message))
        return {"changed_nodes": self._renders(changed)}

    def _op_pick(self, message: dict) -> dict:
        target = message.get("target")
        panel = message.get("panel")
        px, py = float(message["px"]), float(message["py"])
        if target == "line":
            picked, messages = self.scene.pick_line(panel, px, py)
            if picked >= 0 and message.get("then") == "sphere":
                messages = messages + [MSG_PICK_SPHERE]
            return {"picked": picked, "status": "\n".join(messages)}
        if target == "sphere":
            picked, messages = self.scene.pick_sphere(panel, px, py)
            return {"picked": picked, "status": "\n".join(messages)}
        if target == "point":
            picked = self.scene.pick_point(panel, px, py)
            status = ""
            if picked >= 0 and isinstance(message.get("ordinal"), int):
                status = point_chosen(message["ordinal"])
            return {"picked": picked, "status": status}
        raise ValueError(f"unknown pick target {target!r}")

    def _op_intersect(self, message: dict) -> dict:
        created, messages = self.scene.intersect_sphere_line(
            int(message["sphere"]), int(message["line"]))
        return {"nodes": created, "status": "\n".join(messages),
                "changed_nodes": self._renders(created)}

    def _op_snapshot(self, _message: dict) -> dict:
        return {"changed_nodes": self.scene.render_all()}

    def _op_save(self, _message: dict) -> dict:
        return {"document": self.scene.to_document()}

    def _op_load(self, message: dict) -> dict:
        document = message.get("document")
        scene = Scene.from_document(document, tolerance=self.scene.tolerance,
                                    segments=self.scene.segments)
        self.scene = scene
        return {"changed_nodes": self.scene.render_all()}

    def _op_export_svg(self, _message: dict) -> dict:
        return {"svg": export_svg(self.scene)}


class _Handler(socketserver.StreamRequestHandler):
    def handle(self) -> None:
        server: SketchServer = self.server  # type: ignore[assignment]
        session = SketchSession(server.make_scene())
        self.wfile.write(json.dumps(session.handshake(),
                                    sort_keys=True).encode() + b"\n")
        for raw in self.rfile:
            line = raw.strip()
            if not line:
                continue
            try:
                message = json.loads(line.decode("utf-8"))
            except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                event = SketchSession._error(None, f"bad JSON: {exc}")
            else:
                event = session.handle(message)
            self.wfile.write(json.dumps(event, sort_keys=True).encode() + b"\n")


class SketchServer(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, address, tolerance: float = 1e-9, segments: int = 64,
                 scene_path: str | None = None) -> None:
        super().__init__(address, _Handler)
        self.tolerance = tolerance
        self.segments = segments
        self._template: dict | None = None
        if scene_path is not None:
            self._template = json.loads(Path(scene_path).read_text(encoding="utf-8"))

    def make_scene(self) -> Scene:
        # Sessions are independent: each connection gets its own scene.
        if self._template is not None:
            return Scene.from_document(self._template, tolerance=self.tolerance,
                                       segments=self.segments)
        return Scene(tolerance=self.tolerance, segments=self.segments)


def serve(port: int = 4781, scene_path: str | None = None,
          tolerance: float = 1e-9, segments: int = 64,
          ready: threading.Event | None = None) -> None:
    """Run the service until interrupted; prints the bound port so callers
    can pass --port 0 and parse the actual one."""
    with SketchServer(("127.0.0.1", port), tolerance=tolerance,
                      segments=segments, scene_path=scene_path) as server:
        bound = server.server_address[1]
        print(f"LISTENING {bound}", flush=True)
        if ready is not None:
            ready.set()
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            pass


def connect(port: int, host: str = "127.0.0.1") -> "ServiceClient":
    return ServiceClient(host, port)


class ServiceClient:
    """Small blocking client for tests and scripts."""

    def __init__(self, host: str, port: int) -> None:
        self.sock = socket.create_connection((host, port))
        self.reader = self.sock.makefile("r", encoding="utf-8")
        self.seq = 0
        self.handshake = json.loads(self.reader.readline())

    def request(self, op: str, **args) -> dict:
        self.seq += 1
        payload = {"op": op, "seq": self.seq, **args}
        self.sock.sendall(json.dumps(payload).encode() + b"\n")
        return json.loads(self.reader.readline())

    def send_raw(self, payload: dict) -> dict:
        self.sock.sendall(json.dumps(payload).encode() + b"\n")
        return json.loads(self.reader.readline())

    def close(self) -> None:
        try:
            self.reader.close()
        finally:
            self.sock.close()

    def __enter__(self) -> "ServiceClient":
        return self

    def __exit__(self, *exc) -> None:
        self.close()
