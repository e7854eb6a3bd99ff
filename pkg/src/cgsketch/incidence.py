"""Set-theoretic blade operations: join, meet, projection, and the
sphere-line intersection pipeline producing 0, 1 or 2 points.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebra as al
from .algebra import Multivector
from .entities import Vec3, decompose_point_pair, embed_point, is_flat
from .errors import DegenerateGeometryError, FlatGeometryError, InverseError

DEFAULT_TOL = 1e-9

_BASIS_VECTORS = None


def _basis_vectors():
    global _BASIS_VECTORS
    if _BASIS_VECTORS is None:
        _BASIS_VECTORS = (al.e1, al.e2, al.e3, al.n, al.nbar)
    return _BASIS_VECTORS


@dataclass(frozen=True, slots=True)
class IncidenceResult:
    kind: str                     # "two_points" | "one_point" | "none" | "blade"
    points: tuple[Vec3, ...]
    blade: Multivector            # the meet (or join) blade itself


def lone_null_factor(blade: Multivector, tol: float = DEFAULT_TOL) -> str | None:
    """'n' or 'nbar' when exactly one of the null vectors is a factor of the
    blade (wedging with it vanishes), else None."""
    scale = max(1.0, blade.max_abs())
    has_n = (blade ^ al.n).max_abs() <= tol * scale
    has_nbar = (blade ^ al.nbar).max_abs() <= tol * scale
    if has_n and not has_nbar:
        return "n"
    if has_nbar and not has_n:
        return "nbar"
    return None


def project(m: Multivector, onto: Multivector,
            tol: float = DEFAULT_TOL) -> Multivector:
    """Projection (m _| B) _| B^-1 onto an invertible blade B.

    The inverse in the second contraction makes the map idempotent for
    blades of any scale.
    """
    try:
        inv = onto.blade_inverse(tol)
    except InverseError as exc:
        raise DegenerateGeometryError(f"cannot project onto {exc}") from exc
    return m.left_contract(onto).left_contract(inv)


def join(w: Multivector, v: Multivector, tol: float = DEFAULT_TOL) -> Multivector:
    """Blade spanning both arguments.

    Disjoint blades join by the plain wedge; otherwise the carrier of v is
    scanned by projecting the five basis vectors onto v and greedily
    wedging every projection that actually grows the span of the running
    join.  The result contains both w and v (up to scale).
    """
    scale = max(1.0, w.max_abs()) * max(1.0, v.max_abs())
    wedge = w ^ v
    if wedge.max_abs() > tol * scale:
        return wedge
    joined = w
    try:
        v_inv = v.blade_inverse(tol)
    except InverseError as exc:
        raise DegenerateGeometryError(
            f"join factorization needs an invertible blade: {exc}") from exc
    for x in _basis_vectors():
        factor = x.left_contract(v).left_contract(v_inv)
        f_scale = factor.max_abs()
        if f_scale <= tol * max(1.0, v.max_abs()):
            continue
        candidate = joined ^ factor
        if candidate.max_abs() > tol * max(1.0, joined.max_abs()) * f_scale:
            joined = candidate
    return joined


def meet(w: Multivector, v: Multivector, j: Multivector,
         tol: float = DEFAULT_TOL) -> Multivector:
    """Common-subspace blade M = (v _| j^-1) _| w within the join j.

    The contraction against j^-1 dualizes v inside the join, so no special
    casing is needed when v or w carries a lone null factor: validated
    against planar and quadratic oracles for line/line and sphere/line
    configurations, including blades with n as a wedge factor.
    """
    try:
        j_inv = j.blade_inverse(tol)
    except InverseError as exc:
        raise DegenerateGeometryError(
            f"join blade is not invertible (degenerate configuration): {exc}") from exc
    return v.left_contract(j_inv).left_contract(w)


def sphere_line_intersect(sphere: Multivector, line: Multivector,
                          tol: float = DEFAULT_TOL) -> IncidenceResult:
    """Intersect a round grade-4 sphere blade with a flat line blade.

    The join of a round sphere with any line is the full space (a line
    always carries the infinity factor n, which is never inside a round
    sphere's carrier), so the join is the pseudoscalar; the generic
    factorization join is kept as a fallback for near-degenerate input.
    """
    if is_flat(sphere, tol):
        raise FlatGeometryError("grade-4 blade is flat: a plane, not a sphere")
    if not is_flat(line, tol):
        raise FlatGeometryError("grade-3 blade is round: a circle, not a line")
    pair = meet(sphere, line, al.I, tol)
    if pair.max_abs() <= tol * max(1.0, sphere.max_abs()) * max(1.0, line.max_abs()):
        # Degenerate relation to the sphere carrier: use the computed join.
        pair = meet(sphere, line, join(sphere, line, tol), tol)
    decomposition = decompose_point_pair(pair, tol)
    return IncidenceResult(kind=decomposition.kind,
                           points=decomposition.points,
                           blade=pair)


def incidence_residual(point: Vec3, blade: Multivector) -> float:
    """Scale-relative magnitude of X ^ V; zero when the point lies on the
    entity."""
    x = embed_point(point)
    return (x ^ blade).max_abs() / max(1.0, x.max_abs() * blade.max_abs())
