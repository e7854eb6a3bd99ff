"""Versors: rotors, translators and motors applied by two-sided sandwich
products.

Orientation convention: a rotor R = exp(-(theta/2) b) = cos(theta/2)
- sin(theta/2) b in the unit plane bivector b = e1 e2 rotates e1 toward e2
for theta > 0 (right-handed rotation about the +e3 axis, since the
bivector components on (i1, i2, i3) are the axis components).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import algebra as al
from .algebra import Multivector
from .entities import Vec3, as_vec3, euclid_bivector_mv, euclid_vector_mv
from .errors import DegenerateGeometryError

UNIT_TOL = 1e-12
# Renormalize long versor compositions once they drift past this.
DRIFT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class Versor:
    """Unit even element applied as m -> V m reverse(V)."""

    kind: str                 # "rotor" | "translator" | "motor"
    mv: Multivector

    def reverse(self) -> Multivector:
        return self.mv.reverse()

    def unit_error(self) -> float:
        return (self.mv * self.mv.reverse() - al.ONE).max_abs()

    def renormalized(self) -> "Versor":
        period = self.mv * self.mv.reverse()
        scale = period.q.s.real
        if scale <= 0.0:
            raise DegenerateGeometryError("versor cannot be renormalized")
        return Versor(self.kind, self.mv.scaled(1.0 / math.sqrt(scale)))

    def compose(self, inner: "Versor") -> "Versor":
        """Versor applying ``inner`` first, then ``self``."""
        kind = self.kind if self.kind == inner.kind else "motor"
        combined = Versor(kind, self.mv * inner.mv)
        if combined.unit_error() > DRIFT_TOL:
            combined = combined.renormalized()
        return combined

    def apply(self, m: Multivector) -> Multivector:
        return apply_versor(self, m)

    def apply_point(self, v) -> Vec3:
        from .entities import embed_point, extract_point
        return extract_point(self.apply(embed_point(as_vec3(v))))


@dataclass(frozen=True, slots=True)
class RotorSpec:
    """Rotation plane (unit bivector), angle and center."""

    plane: Multivector
    angle: float
    center: Vec3 = Vec3()


def _check_unit_bivector(b: Multivector, tol: float = 1e-9) -> None:
    if b.grades(1e-13 * max(1.0, b.max_abs())) != (2,):
        raise DegenerateGeometryError("rotation plane must be a pure bivector")
    if abs(b.magnitude_squared() - 1.0) > tol:
        raise DegenerateGeometryError(
            f"rotation plane must be unit (|b|^2 = {b.magnitude_squared()})")


def make_rotor(plane: Multivector, angle: float) -> Versor:
    """Rotor exp(-(angle/2) plane) built in closed form."""
    _check_unit_bivector(plane)
    half = 0.5 * angle
    return Versor("rotor",
                  al.ONE.scaled(math.cos(half)) - plane.scaled(math.sin(half)))


def rotor_from_axis_angle(axis, angle: float) -> Versor:
    """Rotor about a Euclidean axis through the origin."""
    u = as_vec3(axis).normalized()
    return make_rotor(euclid_bivector_mv(u.x, u.y, u.z), angle)


def make_translator(offset) -> Versor:
    """Translator T = 1 + (1/2) n a; the nilpotency of n terminates the
    exponential series after the linear term."""
    a = euclid_vector_mv(as_vec3(offset))
    return Versor("translator", al.ONE + (al.n * a).scaled(0.5))


def make_rotor_about(plane: Multivector, angle: float, center) -> Versor:
    """Rotation about an arbitrary center: R' = T(c) R reverse(T(c))."""
    rotor = make_rotor(plane, angle)
    c = as_vec3(center)
    if c.max_abs() == 0.0:
        return rotor
    mover = make_translator(c)
    return Versor("rotor", mover.mv * rotor.mv * mover.reverse())


def compose_motor(translation, spec: RotorSpec) -> Versor:
    """Motor D = T(t) R'(angle, center)."""
    pivot = make_rotor_about(spec.plane, spec.angle, spec.center)
    return Versor("motor", make_translator(translation).mv * pivot.mv)


def apply_versor(versor: Versor, m: Multivector,
                 unit_tol: float = 1e-9) -> Multivector:
    """Two-sided sandwich V m reverse(V); V must be unit within tolerance."""
    err = versor.unit_error()
    if err > unit_tol:
        raise DegenerateGeometryError(
            f"versor is not unit (|V ~V - 1| = {err:.3e})")
    return versor.mv * m * versor.mv.reverse()
