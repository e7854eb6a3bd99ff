"""Byte-stable SVG export of a scene: front and right-side view panels side
by side, drawn with the sketcher's color scheme."""

from __future__ import annotations

from .entities import Vec3
from .scene import (
    COLOR_INVALID,
    PANEL_SIZE,
    SIDE_COLOR,
    PanelView,
    Scene,
    SceneNode,
)

GUTTER = 20.0
POINT_RADIUS = 3.0
POLE_RADIUS = 2.0


def _fmt(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


def _panel_color(node: SceneNode, panel_name: str) -> str:
    if not node.valid:
        return COLOR_INVALID
    if panel_name == "side":
        return SIDE_COLOR.get(node.color, node.color)
    return node.color


def _polyline(points, view: PanelView, offset_x: float, color: str,
              clip: str) -> str:
    coords = []
    for p in points:
        px, py = view.to_pixel(p)
        coords.append(f"{_fmt(px + offset_x)},{_fmt(py)}")
    return (f'<polyline points="{" ".join(coords)}" fill="none" '
            f'stroke="{color}" stroke-width="1" clip-path="url(#{clip})"/>')


def _disk(p: Vec3, view: PanelView, offset_x: float, color: str, clip: str,
          radius: float = POINT_RADIUS) -> str:
    px, py = view.to_pixel(p)
    return (f'<circle cx="{_fmt(px + offset_x)}" cy="{_fmt(py)}" '
            f'r="{_fmt(radius)}" fill="{color}" clip-path="url(#{clip})"/>')


def export_svg(scene: Scene) -> str:
    """Deterministic two-panel rendering; identical scenes yield identical
    bytes."""
    width = 2 * PANEL_SIZE + GUTTER
    height = PANEL_SIZE
    panels = (("front", scene.panels["front"], 0.0),
              ("side", scene.panels["side"], PANEL_SIZE + GUTTER))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        "<defs>",
    ]
    for name, _view, offset in panels:
        out.append(f'<clipPath id="clip-{name}"><rect x="{_fmt(offset)}" y="0" '
                   f'width="{_fmt(PANEL_SIZE)}" height="{_fmt(PANEL_SIZE)}"/>'
                   "</clipPath>")
    out.append("</defs>")
    out.append(f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" '
               'fill="white"/>')
    for name, _view, offset in panels:
        out.append(f'<rect x="{_fmt(offset)}" y="0" width="{_fmt(PANEL_SIZE)}" '
                   f'height="{_fmt(PANEL_SIZE)}" fill="none" stroke="black"/>')
    for node in sorted(scene.nodes.values(), key=lambda n: n.id):
        for name, view, offset in panels:
            color = _panel_color(node, name)
            clip = f"clip-{name}"
            if node.is_point():
                if node.coords is None:
                    continue
                out.append(_disk(node.coords, view, offset, color, clip))
            elif node.kind == "line":
                if not node.valid:
                    continue
                out.append(_polyline(scene.render_line_span(node), view, offset,
                                     color, clip))
            elif node.kind == "circle":
                if not node.valid:
                    continue
                out.append(_polyline(scene.tessellate_circle(node), view, offset,
                                     color, clip))
            elif node.kind == "sphere":
                if not node.valid:
                    continue
                net, poles = scene.tessellate_sphere(node)
                for polyline in net:
                    out.append(_polyline(polyline, view, offset, color, clip))
                for pole in poles:
                    out.append(_disk(pole, view, offset, color, clip, POLE_RADIUS))
    out.append("</svg>")
    return "\n".join(out) + "\n"
