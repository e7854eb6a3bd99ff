"""Construction state for the sketcher: identified points and derived
entities in a dependency DAG, reconstruction on point moves, tessellation
for display, 2D picking, persistence and SVG export.

Two orthographic panels share the vertical axis: the front panel maps
world (x, y) to (horizontal, vertical), the side panel maps (z, y).  A
point therefore appears at the same height in both panels.  World-to-pixel
is a uniform scale plus offset per panel (default 40 px per unit, origin
at the panel center, vertical axis up).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .algebra import Multivector
from .entities import (
    LineParams,
    SphereParams,
    Vec3,
    as_vec3,
    circle_params,
    circle_through,
    embed_point,
    euclid_bivector_mv,
    line_params,
    line_through,
    is_flat,
    sphere_from_center_radius,
    sphere_params,
    sphere_through,
)
from .errors import CgaError, DegenerateGeometryError, SceneError
from .incidence import sphere_line_intersect
from .transforms import make_rotor_about, rotor_from_axis_angle

SCHEMA_VERSION = 1

PANEL_SIZE = 480.0
PIXELS_PER_UNIT = 40.0

LINE_PICK_PX = 3.0     # stated line threshold
POLE_PICK_PX = 5.0     # "small sensitive area" around each pole
POINT_PICK_PX = 5.0

CIRCLE_SEGMENTS = 64
SPHERE_MERIDIANS = 12
SPHERE_LATITUDES = 8

COLOR_POINT = "blue"             # side panel renders green
COLOR_DERIVED_POINT = "darkblue"  # side panel renders darkgreen
COLOR_LINE = "skyblue"
COLOR_CIRCLE = "red"
COLOR_SPHERE = "yellow"
COLOR_INVALID = "gray"
SIDE_COLOR = {"blue": "green", "darkblue": "darkgreen"}

MSG_TWO = "Two points of intersection!"
MSG_ONE = "One point of intersection!"
MSG_NONE = "No intersection!"
MSG_NEW_LINE = "Select a new line!"
MSG_PICK_SPHERE = "And now select a sphere!"

POINT_KINDS = ("free_point", "derived_point")
ENTITY_KINDS = ("line", "circle", "sphere")
ALL_KINDS = POINT_KINDS + ENTITY_KINDS


def point_chosen(ordinal: int) -> str:
    return f"point {ordinal} chosen!"


def line_selected(node_id: int) -> str:
    return f"Line No. {node_id} selected."


def sphere_selected(node_id: int) -> str:
    return f"Sphere No. {node_id} selected."


@dataclass(frozen=True, slots=True)
class PanelView:
    """Affine world-to-pixel map of one orthographic panel."""

    name: str
    axes: tuple[str, str]      # (horizontal, vertical) world component names
    scale: float = PIXELS_PER_UNIT
    cx: float = PANEL_SIZE / 2
    cy: float = PANEL_SIZE / 2
    width: float = PANEL_SIZE
    height: float = PANEL_SIZE

    def world_components(self, p: Vec3) -> tuple[float, float]:
        comp = {"x": p.x, "y": p.y, "z": p.z}
        return comp[self.axes[0]], comp[self.axes[1]]

    def to_pixel(self, p: Vec3) -> tuple[float, float]:
        h, v = self.world_components(p)
        return self.cx + self.scale * h, self.cy - self.scale * v

    def describe(self) -> dict:
        return {"axes": list(self.axes), "scale": self.scale,
                "cx": self.cx, "cy": self.cy, "flip_y": True,
                "width": self.width, "height": self.height}


def default_panels() -> dict[str, PanelView]:
    return {"front": PanelView("front", ("x", "y")),
            "side": PanelView("side", ("z", "y"))}


@dataclass
class SceneNode:
    id: int
    kind: str
    parents: tuple[int, ...] = ()
    coords: Vec3 | None = None          # free and derived points
    radius: float | None = None         # center-radius spheres
    color: str = COLOR_POINT
    valid: bool = True
    blade: Multivector | None = None
    params: object | None = None        # LineParams | CircleParams | SphereParams

    def is_point(self) -> bool:
        return self.kind in POINT_KINDS


class Scene:
    """Single-writer construction state.

    All mutation goes through the command methods below; read-only
    callers may hold the documents produced by :meth:`to_document`.
    """

    def __init__(self, tolerance: float = 1e-9,
                 segments: int = CIRCLE_SEGMENTS) -> None:
        self.tolerance = tolerance
        self.segments = segments
        self.nodes: dict[int, SceneNode] = {}
        self.next_id = 0
        self.panels = default_panels()

    # ------------------------------------------------------------------
    # helpers
    # ------------------------------------------------------------------
    def node(self, node_id: int) -> SceneNode:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise SceneError(f"no node with id {node_id}") from None

    def _point_node(self, node_id: int) -> SceneNode:
        node = self.node(node_id)
        if not node.is_point():
            raise SceneError(f"node {node_id} is a {node.kind}, not a point")
        if not node.valid:
            raise SceneError(f"point {node_id} is currently invalid")
        return node

    def _take_id(self) -> int:
        node_id = self.next_id
        self.next_id += 1
        return node_id

    def nodes_by_kind(self, *kinds: str) -> list[SceneNode]:
        return [n for n in self.nodes.values() if n.kind in kinds]

    # ------------------------------------------------------------------
    # creation commands
    # ------------------------------------------------------------------
    def create_point(self, position) -> int:
        p = as_vec3(position)
        if not all(math.isfinite(c) for c in p.as_tuple()):
            raise SceneError(f"point coordinates must be finite, got {p}")
        node = SceneNode(id=self._take_id(), kind="free_point", coords=p,
                         color=COLOR_POINT, blade=embed_point(p))
        self.nodes[node.id] = node
        return node.id

    def _parent_coords(self, parent_ids: Iterable[int]) -> list[Vec3]:
        coords = []
        for pid in parent_ids:
            coords.append(self._point_node(pid).coords)
        return coords

    def create_line(self, p1: int, p2: int) -> int:
        coords = self._parent_coords((p1, p2))
        try:
            blade = line_through(*coords, tol=self.tolerance)
        except CgaError as exc:
            raise SceneError(f"cannot build line through {p1}, {p2}: {exc}") from exc
        node = SceneNode(id=self._take_id(), kind="line", parents=(p1, p2),
                         color=COLOR_LINE, blade=blade,
                         params=line_params(blade, self.tolerance))
        self.nodes[node.id] = node
        return node.id

    def create_circle(self, p1: int, p2: int, p3: int) -> int:
        coords = self._parent_coords((p1, p2, p3))
        try:
            blade = circle_through(*coords, tol=self.tolerance)
            if is_flat(blade, self.tolerance):
                raise DegenerateGeometryError("the three points are collinear")
            params = circle_params(blade, self.tolerance)
        except CgaError as exc:
            raise SceneError(
                f"cannot build circle through {p1}, {p2}, {p3}: {exc}") from exc
        node = SceneNode(id=self._take_id(), kind="circle", parents=(p1, p2, p3),
                         color=COLOR_CIRCLE, blade=blade, params=params)
        self.nodes[node.id] = node
        return node.id

    def create_sphere(self, p1: int, p2: int, p3: int, p4: int) -> int:
        ids = (p1, p2, p3, p4)
        coords = self._parent_coords(ids)
        try:
            blade = sphere_through(*coords, tol=self.tolerance)
            if is_flat(blade, self.tolerance):
                raise DegenerateGeometryError("the four points are coplanar")
            params = sphere_params(blade, self.tolerance)
        except CgaError as exc:
            raise SceneError(
                f"cannot build sphere through {ids}: {exc}") from exc
        node = SceneNode(id=self._take_id(), kind="sphere", parents=ids,
                         color=COLOR_SPHERE, blade=blade, params=params)
        self.nodes[node.id] = node
        return node.id

    def create_sphere_cr(self, center: int, radius: float) -> int:
        coords = self._parent_coords((center,))
        try:
            blade = sphere_from_center_radius(coords[0], radius, self.tolerance)
            params = sphere_params(blade, self.tolerance)
        except CgaError as exc:
            raise SceneError(
                f"cannot build sphere around {center} with r={radius}: {exc}") from exc
        node = SceneNode(id=self._take_id(), kind="sphere", parents=(center,),
                         radius=float(radius), color=COLOR_SPHERE,
                         blade=blade, params=params)
        self.nodes[node.id] = node
        return node.id

    # ------------------------------------------------------------------
    # intersection command
    # ------------------------------------------------------------------
    def intersect_sphere_line(self, sphere_id: int,
                              line_id: int) -> tuple[list[int], list[str]]:
        sphere = self.node(sphere_id)
        line = self.node(line_id)
        if sphere.kind != "sphere":
            raise SceneError(f"node {sphere_id} is not a sphere")
        if line.kind != "line":
            raise SceneError(f"node {line_id} is not a line")
        if not (sphere.valid and line.valid):
            raise SceneError("cannot intersect invalid entities")
        result = sphere_line_intersect(sphere.blade, line.blade, self.tolerance)
        created: list[int] = []
        for branch, point in enumerate(result.points):
            node = SceneNode(id=self._take_id(), kind="derived_point",
                             parents=(sphere_id, line_id, branch),
                             coords=point, color=COLOR_DERIVED_POINT,
                             blade=embed_point(point))
            self.nodes[node.id] = node
            created.append(node.id)
        count_msg = {"two_points": MSG_TWO, "one_point": MSG_ONE,
                     "none": MSG_NONE}[result.kind]
        return created, [count_msg, MSG_NEW_LINE]

    # ------------------------------------------------------------------
    # move command with dependency propagation
    # ------------------------------------------------------------------
    def _children_map(self) -> dict[int, list[int]]:
        children: dict[int, list[int]] = {nid: [] for nid in self.nodes}
        for node in self.nodes.values():
            for pid in node.parents[:2 if node.kind == "derived_point" else None]:
                children[pid].append(node.id)
        return children

    def _dependents_in_topo_order(self, start: int) -> list[int]:
        children = self._children_map()
        affected: set[int] = set()
        stack = [start]
        while stack:
            current = stack.pop()
            for child in children[current]:
                if child not in affected:
                    affected.add(child)
                    stack.append(child)
        # Kahn's algorithm restricted to the affected sub-DAG; node ids are
        # not assumed ordered, only acyclic.
        indegree = {nid: 0 for nid in affected}
        for nid in affected:
            node = self.nodes[nid]
            for pid in node.parents[:2 if node.kind == "derived_point" else None]:
                if pid in affected:
                    indegree[nid] += 1
        ready = sorted(nid for nid, deg in indegree.items() if deg == 0)
        order: list[int] = []
        while ready:
            nid = ready.pop(0)
            order.append(nid)
            for child in children[nid]:
                if child in affected:
                    indegree[child] -= 1
                    if indegree[child] == 0:
                        ready.append(child)
            ready.sort()
        return order

    def _recompute(self, node: SceneNode) -> None:
        try:
            if node.kind == "line":
                coords = [self.nodes[p].coords for p in node.parents]
                node.blade = line_through(*coords, tol=self.tolerance)
                node.params = line_params(node.blade, self.tolerance)
            elif node.kind == "circle":
                coords = [self.nodes[p].coords for p in node.parents]
                node.blade = circle_through(*coords, tol=self.tolerance)
                if is_flat(node.blade, self.tolerance):
                    raise DegenerateGeometryError("circle points became collinear")
                node.params = circle_params(node.blade, self.tolerance)
            elif node.kind == "sphere":
                if node.radius is not None:
                    center = self.nodes[node.parents[0]].coords
                    node.blade = sphere_from_center_radius(center, node.radius,
                                                           self.tolerance)
                else:
                    coords = [self.nodes[p].coords for p in node.parents]
                    node.blade = sphere_through(*coords, tol=self.tolerance)
                    if is_flat(node.blade, self.tolerance):
                        raise DegenerateGeometryError("sphere points became coplanar")
                node.params = sphere_params(node.blade, self.tolerance)
            elif node.kind == "derived_point":
                sphere_id, line_id, branch = node.parents
                sphere = self.nodes[sphere_id]
                line = self.nodes[line_id]
                if not (sphere.valid and line.valid):
                    raise DegenerateGeometryError("parent entity is invalid")
                result = sphere_line_intersect(sphere.blade, line.blade,
                                               self.tolerance)
                if branch >= len(result.points):
                    raise DegenerateGeometryError("intersection branch vanished")
                node.coords = result.points[branch]
                node.blade = embed_point(node.coords)
            else:
                raise SceneError(f"cannot recompute a {node.kind}")
        except CgaError:
            # Keep identity and stale payload; the node is grayed out and
            # springs back to life when geometry permits again.
            node.valid = False
        else:
            node.valid = True

    def move_point(self, node_id: int, position) -> list[int]:
        node = self.node(node_id)
        if node.kind == "derived_point":
            raise SceneError(
                f"point {node_id} is derived and follows its parents; move those")
        if node.kind != "free_point":
            raise SceneError(f"node {node_id} is a {node.kind}, not a movable point")
        p = as_vec3(position)
        if not all(math.isfinite(c) for c in p.as_tuple()):
            raise SceneError(f"point coordinates must be finite, got {p}")
        node.coords = p
        node.blade = embed_point(p)
        changed = [node_id]
        for nid in self._dependents_in_topo_order(node_id):
            self._recompute(self.nodes[nid])
            changed.append(nid)
        return changed

    # ------------------------------------------------------------------
    # tessellation
    # ------------------------------------------------------------------
    def tessellate_circle(self, node_or_blade, segments: int | None = None) -> list[Vec3]:
        """Closed polyline around a circle, generated by repeated rotor
        application about the circle axis; a flat blade degenerates to a
        straight segment through the view region."""
        segments = segments or self.segments
        blade = node_or_blade.blade if isinstance(node_or_blade, SceneNode) else node_or_blade
        if is_flat(blade, self.tolerance):
            params = line_params(blade, self.tolerance)
            span = PANEL_SIZE / PIXELS_PER_UNIT * 2.0
            return [params.point_at(-span), params.point_at(span)]
        params = circle_params(blade, self.tolerance)
        axis = params.plane.normalized()
        plane_mv = euclid_bivector_mv(axis.x, axis.y, axis.z)
        # seed: any unit vector perpendicular to the axis
        probe = Vec3(1, 0, 0) if abs(axis.x) < 0.9 else Vec3(0, 1, 0)
        radial = probe - axis.scaled(probe.dot(axis))
        seed = params.center + radial.normalized().scaled(params.radius)
        step = 2.0 * math.pi / segments
        points = [seed]
        for k in range(1, segments):
            rotor = make_rotor_about(plane_mv, k * step, params.center)
            points.append(rotor.apply_point(seed))
        points.append(points[0])
        return points

    def tessellate_sphere(self, node_or_blade, meridians: int = SPHERE_MERIDIANS,
                          latitudes: int = SPHERE_LATITUDES
                          ) -> tuple[list[list[Vec3]], tuple[Vec3, Vec3]]:
        """Longitude/latitude polyline net plus the two poles.

        Poles sit on the vertical axis through the center (c +- r e2) so
        they appear at the meridian crossings in both panels and act as
        the sphere's pick handles.
        """
        blade = node_or_blade.blade if isinstance(node_or_blade, SceneNode) else node_or_blade
        params = sphere_params(blade, self.tolerance)
        c, r = params.center, params.radius
        north = c + Vec3(0, r, 0)
        south = c - Vec3(0, r, 0)
        # seed meridian in the x-y plane, rotated about the vertical axis
        grid: list[list[Vec3]] = []
        for k in range(meridians):
            rotor = rotor_from_axis_angle((0, 1, 0), 2.0 * math.pi * k / meridians)
            if k == 0:
                rotor = None
            meridian = []
            for j in range(latitudes + 1):
                phi = math.pi * j / latitudes
                seed = c + Vec3(r * math.sin(phi), r * math.cos(phi), 0.0)
                if rotor is None:
                    meridian.append(seed)
                else:
                    shifted = seed - c
                    turned = rotor.apply_point(shifted)
                    meridian.append(c + turned)
            grid.append(meridian)
        net = list(grid)
        for j in range(1, latitudes):
            ring = [grid[k][j] for k in range(meridians)]
            ring.append(grid[0][j])
            net.append(ring)
        return net, (north, south)

    # ------------------------------------------------------------------
    # picking
    # ------------------------------------------------------------------
    def _panel(self, panel: str) -> PanelView:
        try:
            return self.panels[panel]
        except KeyError:
            raise SceneError(f"unknown panel {panel!r}") from None

    def _line_segment_pixels(self, node: SceneNode,
                             view: PanelView) -> tuple | None:
        """The node's projected segment clipped to the panel rectangle."""
        params: LineParams = node.params
        bx, by = view.to_pixel(params.base)
        dh, dv = view.world_components(params.unit)
        dx, dy = view.scale * dh, -view.scale * dv
        if math.hypot(dx, dy) < 1e-12:
            if 0.0 <= bx <= view.width and 0.0 <= by <= view.height:
                return (bx, by, bx, by)
            return None
        t0, t1 = -math.inf, math.inf
        for start, delta, limit in ((bx, dx, view.width), (by, dy, view.height)):
            if abs(delta) < 1e-12:
                if start < 0.0 or start > limit:
                    return None
                continue
            lo, hi = (0.0 - start) / delta, (limit - start) / delta
            if lo > hi:
                lo, hi = hi, lo
            t0, t1 = max(t0, lo), min(t1, hi)
        if t0 > t1:
            return None
        return (bx + t0 * dx, by + t0 * dy, bx + t1 * dx, by + t1 * dy)

    @staticmethod
    def _point_segment_distance(px: float, py: float, seg: tuple) -> float:
        x0, y0, x1, y1 = seg
        vx, vy = x1 - x0, y1 - y0
        length_sq = vx * vx + vy * vy
        if length_sq == 0.0:
            return math.hypot(px - x0, py - y0)
        t = max(0.0, min(1.0, ((px - x0) * vx + (py - y0) * vy) / length_sq))
        return math.hypot(px - (x0 + t * vx), py - (y0 + t * vy))

    def pick_line(self, panel: str, px: float, py: float) -> tuple[int, list[str]]:
        """Closest valid line within the 3 px threshold; -1 otherwise.
        The boundary pixel counts as a hit; ties go to the lower id."""
        view = self._panel(panel)
        best_id, best_dist = -1, math.inf
        for node in sorted(self.nodes_by_kind("line"), key=lambda n: n.id):
            if not node.valid:
                continue
            seg = self._line_segment_pixels(node, view)
            if seg is None:
                continue
            dist = self._point_segment_distance(px, py, seg)
            if dist <= LINE_PICK_PX and dist < best_dist:
                best_id, best_dist = node.id, dist
        return best_id, [line_selected(best_id)]

    def sphere_poles(self, node: SceneNode) -> tuple[Vec3, Vec3]:
        params: SphereParams = node.params
        return (params.center + Vec3(0, params.radius, 0),
                params.center - Vec3(0, params.radius, 0))

    def pick_sphere(self, panel: str, px: float, py: float) -> tuple[int, list[str]]:
        """Sphere whose projected pole is nearest within 5 px; -1 otherwise."""
        view = self._panel(panel)
        best_id, best_dist = -1, math.inf
        for node in sorted(self.nodes_by_kind("sphere"), key=lambda n: n.id):
            if not node.valid:
                continue
            for pole in self.sphere_poles(node):
                qx, qy = view.to_pixel(pole)
                dist = math.hypot(px - qx, py - qy)
                if dist <= POLE_PICK_PX and dist < best_dist:
                    best_id, best_dist = node.id, dist
        return best_id, [sphere_selected(best_id)]

    def pick_point(self, panel: str, px: float, py: float) -> int:
        """Nearest point disk within 5 px; -1 otherwise (no status text)."""
        view = self._panel(panel)
        best_id, best_dist = -1, math.inf
        for node in sorted(self.nodes_by_kind(*POINT_KINDS), key=lambda n: n.id):
            if not node.valid:
                continue
            qx, qy = view.to_pixel(node.coords)
            dist = math.hypot(px - qx, py - qy)
            if dist <= POINT_PICK_PX and dist < best_dist:
                best_id, best_dist = node.id, dist
        return best_id

    def pixel_to_world(self, panel: str, px: float, py: float,
                       vertical_from: float | None = None) -> Vec3:
        """Inverse panel map.  The front panel fixes (x, y) and leaves z at
        0; the side panel fixes (z, y).  ``vertical_from`` carries the y
        value over from a first click in the other panel."""
        view = self._panel(panel)
        h = (px - view.cx) / view.scale
        v = (view.cy - py) / view.scale if vertical_from is None else vertical_from
        if view.axes[0] == "x":
            return Vec3(h, v, 0.0)
        return Vec3(0.0, v, h)

    # ------------------------------------------------------------------
    # persistence
    # ------------------------------------------------------------------
    def to_document(self) -> dict:
        nodes = []
        for node in sorted(self.nodes.values(), key=lambda n: n.id):
            entry: dict = {"id": node.id, "kind": node.kind,
                           "parents": list(node.parents),
                           "color": node.color, "valid": node.valid}
            if node.coords is not None:
                entry["coords"] = list(node.coords.as_tuple())
            if node.radius is not None:
                entry["radius"] = node.radius
            nodes.append(entry)
        return {"version": SCHEMA_VERSION, "nodes": nodes}

    def save_json(self) -> str:
        return json.dumps(self.to_document(), sort_keys=True,
                          separators=(",", ":"))

    @classmethod
    def from_document(cls, document: dict, tolerance: float = 1e-9,
                      segments: int = CIRCLE_SEGMENTS) -> "Scene":
        if not isinstance(document, dict):
            raise SceneError("scene document must be an object")
        version = document.get("version")
        if version != SCHEMA_VERSION:
            raise SceneError(f"unsupported scene version {version!r}")
        raw_nodes = document.get("nodes")
        if not isinstance(raw_nodes, list):
            raise SceneError("scene document has no node list")
        scene = cls(tolerance=tolerance, segments=segments)
        for raw in sorted(raw_nodes, key=lambda r: r.get("id", -1)):
            scene._load_node(raw)
        scene.next_id = max(scene.nodes, default=-1) + 1
        return scene

    def _load_node(self, raw: dict) -> None:
        node_id = raw.get("id")
        try:
            if not isinstance(node_id, int) or node_id < 0:
                raise SceneError(f"bad node id {node_id!r}")
            kind = raw.get("kind")
            if kind not in ALL_KINDS:
                raise SceneError(f"unknown node kind {kind!r}")
            parents = raw.get("parents", [])
            if (not isinstance(parents, list)
                    or not all(isinstance(p, int) for p in parents)):
                raise SceneError("parents must be a list of integers")
            color = raw.get("color")
            valid = raw.get("valid")
            if not isinstance(color, str) or not isinstance(valid, bool):
                raise SceneError("color must be a string and valid a boolean")
            node = SceneNode(id=node_id, kind=kind, parents=tuple(parents),
                             color=color, valid=valid)
            if kind in POINT_KINDS:
                coords = raw.get("coords")
                if (not isinstance(coords, list) or len(coords) != 3
                        or not all(isinstance(c, (int, float)) for c in coords)):
                    raise SceneError("point node needs 3 numeric coords")
                node.coords = Vec3(*map(float, coords))
                node.blade = embed_point(node.coords)
            if kind == "derived_point" and len(parents) != 3:
                raise SceneError("derived point needs (sphere, line, branch) parents")
            if "radius" in raw:
                radius = raw["radius"]
                if not isinstance(radius, (int, float)) or radius <= 0:
                    raise SceneError(f"bad radius {radius!r}")
                node.radius = float(radius)
            if kind in ENTITY_KINDS:
                entity_parents = parents
                for pid in entity_parents:
                    if pid not in self.nodes or not self.nodes[pid].is_point():
                        raise SceneError(f"parent {pid} missing or not a point")
                if node.valid:
                    self._recompute(node)
            if node_id in self.nodes:
                raise SceneError("duplicate node id")
            self.nodes[node_id] = node
        except SceneError as exc:
            raise SceneError(f"node {node_id!r}: {exc}") from None

    # ------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------
    def render_line_span(self, node: SceneNode) -> list[Vec3]:
        """A world-space segment long enough to cross the view region."""
        params: LineParams = node.params
        span = 4.0 * PANEL_SIZE / PIXELS_PER_UNIT
        return [params.point_at(-span), params.point_at(span)]

    def render_node(self, node_id: int) -> dict:
        """World-coordinate drawing data for one node; clients apply the
        per-panel affine maps themselves."""
        node = self.node(node_id)
        out: dict = {"id": node.id, "kind": node.kind, "color": node.color,
                     "side_color": SIDE_COLOR.get(node.color, node.color),
                     "valid": node.valid}
        if not node.valid:
            return out
        if node.is_point():
            out["pos"] = list(node.coords.as_tuple())
        elif node.kind == "line":
            out["polyline"] = [list(p.as_tuple())
                               for p in self.render_line_span(node)]
        elif node.kind == "circle":
            out["polyline"] = [list(p.as_tuple())
                               for p in self.tessellate_circle(node)]
        elif node.kind == "sphere":
            net, poles = self.tessellate_sphere(node)
            out["net"] = [[list(p.as_tuple()) for p in line] for line in net]
            out["poles"] = [list(p.as_tuple()) for p in poles]
        return out

    def render_all(self) -> list[dict]:
        return [self.render_node(nid) for nid in sorted(self.nodes)]
