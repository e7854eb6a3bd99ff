"""Line-oriented scripting of a scene.

Grammar (one command per line, ``#`` starts a comment):

    point X Y Z
    line P1 P2
    circle P1 P2 P3
    sphere P1 P2 P3 P4
    sphere_cr PC R
    move P X Y Z
    intersect S L
    save FILE
    load FILE
    export FILE.svg
    params ID

Entity commands echo the interactive transcript ("point 1 chosen!" per
consumed parent); intersections report their outcome verbatim.  Failed
commands print ``error: ...`` and leave the scene untouched.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Callable

from .entities import CircleParams, LineParams, SphereParams
from .errors import CgaError, SceneError
from .scene import Scene, point_chosen
from .svg import export_svg


def _fmt(value: float) -> str:
    return f"{value:.9g}"


def _fmt_vec(v) -> str:
    return f"({_fmt(v.x)}, {_fmt(v.y)}, {_fmt(v.z)})"


class ScriptSession:
    """Executes script commands against a scene and emits status lines."""

    def __init__(self, scene: Scene | None = None,
                 out: Callable[[str], None] | None = None,
                 base_dir: str | Path = ".") -> None:
        self.scene = scene if scene is not None else Scene()
        self.out = out if out is not None else (lambda line: print(line))
        self.base_dir = Path(base_dir)

    # ------------------------------------------------------------------
    def run_text(self, text: str) -> None:
        for line in text.splitlines():
            self.execute(line)

    def run_file(self, path: str | Path) -> None:
        self.run_text(Path(path).read_text(encoding="utf-8"))

    def execute(self, line: str) -> None:
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            return
        parts = stripped.split()
        command, args = parts[0], parts[1:]
        handler = getattr(self, f"_cmd_{command}", None)
        if handler is None:
            self.out(f"error: unknown command {command!r}")
            return
        try:
            handler(args)
        except (CgaError, ValueError, OSError) as exc:
            self.out(f"error: {exc}")

    # ------------------------------------------------------------------
    @staticmethod
    def _floats(args, count):
        if len(args) != count:
            raise ValueError(f"expected {count} numbers, got {len(args)}")
        return [float(a) for a in args]

    @staticmethod
    def _ints(args, count):
        if len(args) != count:
            raise ValueError(f"expected {count} ids, got {len(args)}")
        return [int(a) for a in args]

    def _echo_chosen(self, count: int) -> None:
        for ordinal in range(1, count + 1):
            self.out(point_chosen(ordinal))

    def _cmd_point(self, args):
        x, y, z = self._floats(args, 3)
        self.scene.create_point((x, y, z))

    def _cmd_line(self, args):
        p1, p2 = self._ints(args, 2)
        self._echo_chosen(2)
        self.scene.create_line(p1, p2)

    def _cmd_circle(self, args):
        p1, p2, p3 = self._ints(args, 3)
        self._echo_chosen(3)
        self.scene.create_circle(p1, p2, p3)

    def _cmd_sphere(self, args):
        p1, p2, p3, p4 = self._ints(args, 4)
        self._echo_chosen(4)
        self.scene.create_sphere(p1, p2, p3, p4)

    def _cmd_sphere_cr(self, args):
        if len(args) != 2:
            raise ValueError("sphere_cr needs a center id and a radius")
        self.scene.create_sphere_cr(int(args[0]), float(args[1]))

    def _cmd_move(self, args):
        if len(args) != 4:
            raise ValueError("move needs an id and three coordinates")
        self.scene.move_point(int(args[0]),
                              tuple(float(a) for a in args[1:]))

    def _cmd_intersect(self, args):
        sphere_id, line_id = self._ints(args, 2)
        _, messages = self.scene.intersect_sphere_line(sphere_id, line_id)
        for message in messages:
            self.out(message)

    def _cmd_save(self, args):
        if len(args) != 1:
            raise ValueError("save needs a file name")
        (self.base_dir / args[0]).write_text(self.scene.save_json() + "\n",
                                             encoding="utf-8")

    def _cmd_load(self, args):
        if len(args) != 1:
            raise ValueError("load needs a file name")
        document = json.loads((self.base_dir / args[0]).read_text(encoding="utf-8"))
        self.scene = Scene.from_document(document,
                                         tolerance=self.scene.tolerance,
                                         segments=self.scene.segments)

    def _cmd_export(self, args):
        if len(args) != 1:
            raise ValueError("export needs a file name")
        (self.base_dir / args[0]).write_text(export_svg(self.scene),
                                             encoding="utf-8")

    def _cmd_params(self, args):
        (node_id,) = self._ints(args, 1)
        node = self.scene.node(node_id)
        if not node.valid:
            self.out(f"node {node_id} invalid")
            return
        if node.is_point():
            self.out(f"point {_fmt_vec(node.coords)}")
        elif node.kind == "line":
            p: LineParams = node.params
            self.out(f"line base {_fmt_vec(p.base)} unit {_fmt_vec(p.unit)} "
                     f"direction {_fmt_vec(p.direction)} moment {_fmt_vec(p.moment)}")
        elif node.kind == "circle":
            p: CircleParams = node.params
            self.out(f"circle center {_fmt_vec(p.center)} radius {_fmt(p.radius)} "
                     f"plane {_fmt_vec(p.plane.normalized())}")
        elif node.kind == "sphere":
            p: SphereParams = node.params
            self.out(f"sphere center {_fmt_vec(p.center)} radius {_fmt(p.radius)}")
        else:
            raise SceneError(f"node {node_id} has no parameters")


def run_repl(session: ScriptSession, stdin=None, prompt: str = "> ") -> None:
    import sys
    stream = stdin if stdin is not None else sys.stdin
    interactive = stream is sys.stdin and sys.stdin.isatty()
    while True:
        if interactive:
            try:
                line = input(prompt)
            except EOFError:
                break
        else:
            line = stream.readline()
            if not line:
                break
            line = line.rstrip("\n")
        if line.strip() in ("exit", "quit"):
            break
        session.execute(line)
