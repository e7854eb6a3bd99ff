"""Command line entry points: script runner, REPL and the sketch service."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .scene import CIRCLE_SEGMENTS, Scene
from .script import ScriptSession, run_repl


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cgsketch",
        description="Conformal-geometric-algebra 3D sketching toolkit")
    parser.add_argument("--tolerance", type=float, default=1e-9,
                        help="numeric tolerance for zero tests (default 1e-9)")
    parser.add_argument("--segments", type=int, default=CIRCLE_SEGMENTS,
                        help="circle tessellation segments (default 64)")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a sketch script file")
    run_p.add_argument("script", help="path to the script")

    sub.add_parser("repl", help="interactive command loop")

    serve_p = sub.add_parser("serve", help="run the local sketch service")
    serve_p.add_argument("--port", type=int, default=4781,
                         help="TCP port (0 picks a free one)")
    serve_p.add_argument("--scene", default=None,
                         help="scene JSON file preloaded into each session")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    scene = Scene(tolerance=args.tolerance, segments=args.segments)
    if args.command == "run":
        script_path = Path(args.script)
        # file arguments inside the script resolve next to the script itself
        ScriptSession(scene, base_dir=script_path.parent).run_file(script_path)
        return 0
    if args.command == "repl":
        run_repl(ScriptSession(scene))
        return 0
    if args.command == "serve":
        from .service import serve
        serve(port=args.port, scene_path=args.scene,
              tolerance=args.tolerance, segments=args.segments)
        return 0
    return 2


if __name__ == "__main__":
    sys.exit(main())
