"""Classical Euclidean oracles, independent of the algebra kernel."""

from __future__ import annotations

import numpy as np


def circumcircle(p1, p2, p3) -> tuple[np.ndarray, float]:
    """Center and radius of the circle through three non-collinear points."""
    p1, p2, p3 = (np.asarray(p, dtype=float) for p in (p1, p2, p3))
    u = p2 - p1
    v = p3 - p1
    w = np.cross(u, v)
    w2 = w @ w
    if w2 == 0.0:
        raise ValueError("collinear points")
    center = p1 + ((v @ v) * np.cross(np.cross(u, v), u)
                   + (u @ u) * np.cross(v, np.cross(u, v))) / (2.0 * w2)
    return center, float(np.linalg.norm(p1 - center))


def circumsphere(p1, p2, p3, p4) -> tuple[np.ndarray, float]:
    """Center and radius of the sphere through four non-coplanar points."""
    pts = np.array([p1, p2, p3, p4], dtype=float)
    lhs = 2.0 * (pts[1:] - pts[0])
    rhs = (pts[1:] ** 2).sum(axis=1) - (pts[0] ** 2).sum()
    center = np.linalg.solve(lhs, rhs)
    return center, float(np.linalg.norm(pts[0] - center))


def rotation_matrix(axis, angle: float) -> np.ndarray:
    """Rodrigues rotation matrix about a unit axis."""
    u = np.asarray(axis, dtype=float)
    u = u / np.linalg.norm(u)
    k = np.array([[0, -u[2], u[1]],
                  [u[2], 0, -u[0]],
                  [-u[1], u[0], 0]])
    return np.eye(3) + np.sin(angle) * k + (1 - np.cos(angle)) * (k @ k)


def line_point_distance(x, base, direction) -> tuple[np.ndarray, float]:
    """Foot of the perpendicular and distance from x to the line."""
    x = np.asarray(x, dtype=float)
    base = np.asarray(base, dtype=float)
    d = np.asarray(direction, dtype=float)
    t = ((x - base) @ d) / (d @ d)
    foot = base + t * d
    return foot, float(np.linalg.norm(x - foot))


def sphere_line_hits(center, radius, base, direction) -> list[np.ndarray]:
    """Solutions of |base + t u - center|^2 = r^2 (u normalized); the
    discriminant sign decides 0, 1 or 2 points."""
    c = np.asarray(center, dtype=float)
    p0 = np.asarray(base, dtype=float)
    u = np.asarray(direction, dtype=float)
    u = u / np.linalg.norm(u)
    oc = p0 - c
    b_half = oc @ u
    disc = b_half * b_half - (oc @ oc - radius * radius)
    if disc < 0.0:
        return []
    root = np.sqrt(disc)
    if root == 0.0:
        return [p0 - b_half * u]
    return [p0 + (-b_half - root) * u, p0 + (-b_half + root) * u]


def sphere_line_discriminant(center, radius, base, direction) -> float:
    c = np.asarray(center, dtype=float)
    p0 = np.asarray(base, dtype=float)
    u = np.asarray(direction, dtype=float)
    u = u / np.linalg.norm(u)
    oc = p0 - c
    b_half = oc @ u
    return float(b_half * b_half - (oc @ oc - radius * radius))
