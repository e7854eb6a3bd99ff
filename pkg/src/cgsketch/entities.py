"""Conformal representations of points, point pairs, lines, circles, spheres
and planes, with parameter extraction and geometric predicates.

A Euclidean point x maps to the null vector X = x + (x*x/2) n + nbar;
wedges of such points build the entity blades:

* grade 2 -- point pair A1 ^ A2
* grade 3 -- circle A1 ^ A2 ^ A3, or line A1 ^ A2 ^ n (flat)
* grade 4 -- sphere A1 ^ ... ^ A4, or plane (flat)

A grade-3/4 blade is flat exactly when wedging with n vanishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import algebra as al
from .algebra import ComplexQuat, Multivector
from .errors import (
    DegenerateGeometryError,
    FlatGeometryError,
    RepresentationError,
)

DEFAULT_TOL = 1e-9

# Slot indices used to read entity data out of the canonical layout.
_SLOT_NBAR = 16                       # nbar coefficient
_SLOTS_EK = (27, 29, 31)              # e_k (stored negated: I i_k N = -e_k)
_SLOTS_IK = (2, 4, 6)                 # i_k Euclidean bivector
_SLOTS_IKN = (10, 12, 14)             # i_k n
_SLOTS_EKN = (11, 13, 15)             # e_k n (= I i_k n)
_SLOTS_EKNBAR = (19, 21, 23)          # stored as I i_k nbar = -e_k nbar
_SLOTS_EKN_BLOCK1 = (3, 5, 7)         # I i_k = -e_k N
_SLOT_N = 8                           # n coefficient
_SLOT_NN = 24                         # N coefficient


@dataclass(frozen=True, slots=True)
class Vec3:
    """Euclidean 3-vector with plain float coordinates."""

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __add__(self, o: "Vec3") -> "Vec3":
        return Vec3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "Vec3") -> "Vec3":
        return Vec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def scaled(self, k: float) -> "Vec3":
        return Vec3(self.x * k, self.y * k, self.z * k)

    def dot(self, o: "Vec3") -> float:
        return self.x * o.x + self.y * o.y + self.z * o.z

    def cross(self, o: "Vec3") -> "Vec3":
        return Vec3(self.y * o.z - self.z * o.y,
                    self.z * o.x - self.x * o.z,
                    self.x * o.y - self.y * o.x)

    def norm_squared(self) -> float:
        return self.dot(self)

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def normalized(self) -> "Vec3":
        d = self.norm()
        if d == 0.0:
            raise DegenerateGeometryError("cannot normalize the zero vector")
        return self.scaled(1.0 / d)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def max_abs(self) -> float:
        return max(abs(self.x), abs(self.y), abs(self.z))


def as_vec3(v) -> Vec3:
    if isinstance(v, Vec3):
        return v
    x, y, z = v
    return Vec3(float(x), float(y), float(z))


# ---------------------------------------------------------------------------
# embeddings between Euclidean and conformal space
# ---------------------------------------------------------------------------
def euclid_vector_mv(v) -> Multivector:
    """Grade-1 Euclidean vector x1 e1 + x2 e2 + x3 e3."""
    v = as_vec3(v)
    return Multivector(qN=ComplexQuat(v1=complex(0.0, -v.x),
                                      v2=complex(0.0, -v.y),
                                      v3=complex(0.0, -v.z)))


def euclid_bivector_mv(b1: float, b2: float, b3: float) -> Multivector:
    """Euclidean bivector b1 i1 + b2 i2 + b3 i3 (i1 = e2e3 etc.), so the
    component vector (b1, b2, b3) is the rotation axis of the plane."""
    return Multivector(q=ComplexQuat(v1=complex(b1), v2=complex(b2),
                                     v3=complex(b3)))


def embed_point(v) -> Multivector:
    """Conformal embedding X = x + (x*x/2) n + nbar; X*X = 0."""
    v = as_vec3(v)
    half_sq = 0.5 * v.norm_squared()
    return Multivector(
        qn=ComplexQuat(s=complex(half_sq)),
        qnbar=ComplexQuat(s=1 + 0j),
        qN=ComplexQuat(v1=complex(0.0, -v.x),
                       v2=complex(0.0, -v.y),
                       v3=complex(0.0, -v.z)))


def extract_point(m: Multivector, tol: float = DEFAULT_TOL) -> Vec3:
    """Euclidean coordinates of a conformal point representative of any
    scale; the nbar coefficient must be appreciably nonzero."""
    c = m.coefficients()
    w = c[_SLOT_NBAR]
    if abs(w) <= tol * max(1.0, m.max_abs()):
        raise FlatGeometryError(
            "representative has (near-)zero nbar coefficient: point at infinity")
    return Vec3(-c[27] / w, -c[29] / w, -c[31] / w)


def point_distance(a_pt: Multivector, b_pt: Multivector,
                   tol: float = DEFAULT_TOL) -> float:
    """Euclidean distance |a-b| = sqrt(-2 A*B) between normalized points."""
    radicand = -2.0 * a_pt.scalar_product(b_pt)
    if radicand < -tol:
        raise RepresentationError(
            f"-2 A*B = {radicand} is negative; inputs are not normalized points")
    return math.sqrt(max(radicand, 0.0))


# ---------------------------------------------------------------------------
# point pairs
# ---------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class PairDecomposition:
    kind: str                 # "two_points" | "one_point" | "none"
    points: tuple[Vec3, ...]


# When |gamma| (= a^2 - b^2 after direction normalization) is below this
# fraction of the pair scale, the direct recovery divides by a small number;
# conjugating with a unit translator along the dominant direction component
# restores conditioning exactly.
_GAMMA_FALLBACK_FRACTION = 0.5
_TANGENT_EPS = 1e-9


def decompose_point_pair(pair: Multivector, tol: float = DEFAULT_TOL,
                         _allow_fallback: bool = True) -> PairDecomposition:
    """Recover {A, B} from a grade-2 pair blade of any scale.

    The blade A ^ B stores three recoverable pieces: the direction
    u = a - b (e_k nbar slots), the moment-like vector v = a^2 b - b^2 a
    (e_k n slots) and gamma = a^2 - b^2 (N slot).  From those,
    sigma = gamma^2/2 - u.v, rho = sqrt(sigma^2 - u^2 v^2), a^2 and b^2
    follow, and a = (a^2 u + v)/gamma.  The sign of rho^2 classifies the
    pair: positive = two real points, zero = tangent (doubled) point,
    negative = imaginary pair.
    """
    c = pair.coefficients()
    u = Vec3(-c[19], -c[21], -c[23])
    v = Vec3(-2 * c[11], -2 * c[13], -2 * c[15])
    gamma = 2 * c[24]
    u_norm = u.norm()
    blade_scale = max(1.0, pair.max_abs())
    if u_norm <= 1e-13 * blade_scale:
        if abs(gamma) <= 1e-13 * blade_scale and v.norm() <= 1e-13 * blade_scale:
            raise DegenerateGeometryError("degenerate point pair (zero blade data)")
        raise DegenerateGeometryError(
            "pair has no finite direction component (contains infinity)")
    # Work with the representative scaled so |u| = 1; the decomposition is
    # invariant under blade scale (including sign).
    inv = 1.0 / u_norm
    u, v, gamma = u.scaled(inv), v.scaled(inv), gamma * inv
    sigma = 0.5 * gamma * gamma - u.dot(v)
    scale2 = max(1.0, abs(sigma))
    if _allow_fallback and abs(gamma) < _GAMMA_FALLBACK_FRACTION * math.sqrt(scale2):
        axis = max(range(3), key=lambda k: abs((u.x, u.y, u.z)[k]))
        offset = Vec3(*(math.sqrt(scale2) if k == axis else 0.0 for k in range(3)))
        mover = al.ONE + (al.n * euclid_vector_mv(offset)).scaled(0.5)
        moved = mover * pair * mover.reverse()
        inner = decompose_point_pair(moved, tol, _allow_fallback=False)
        return PairDecomposition(inner.kind,
                                 tuple(p - offset for p in inner.points))
    rho2 = sigma * sigma - u.norm_squared() * v.norm_squared()
    eps = _TANGENT_EPS * scale2 * scale2
    if rho2 < -eps:
        return PairDecomposition("none", ())
    rho = math.sqrt(max(rho2, 0.0))
    a_sq = sigma + rho
    b_sq = sigma - rho
    a = (u.scaled(a_sq) + v).scaled(1.0 / gamma)
    if rho2 <= eps:
        return PairDecomposition("one_point", (a,))
    b = (u.scaled(b_sq) + v).scaled(1.0 / gamma)
    return PairDecomposition("two_points", (a, b))


# ---------------------------------------------------------------------------
# blade constructors
# ---------------------------------------------------------------------------
def _ensure_distinct(points: list[Vec3], tol: float) -> None:
    scale = max([1.0] + [p.max_abs() for p in points])
    for k in range(len(points)):
        for j in range(k + 1, len(points)):
            if (points[k] - points[j]).max_abs() <= tol * scale:
                raise DegenerateGeometryError(
                    f"defining points {k} and {j} coincide")


def _point_scale(points: list[Vec3]) -> float:
    return max([1.0] + [p.max_abs() for p in points])


def line_through(a1, a2, tol: float = DEFAULT_TOL) -> Multivector:
    """Flat grade-3 blade A1 ^ A2 ^ n through two distinct points."""
    p = [as_vec3(a1), as_vec3(a2)]
    _ensure_distinct(p, tol)
    return (embed_point(p[0]) ^ embed_point(p[1])) ^ al.n


def circle_through(a1, a2, a3, tol: float = DEFAULT_TOL) -> Multivector:
    """Grade-3 blade A1 ^ A2 ^ A3; flat (a line) when the points are collinear."""
    p = [as_vec3(a1), as_vec3(a2), as_vec3(a3)]
    _ensure_distinct(p, tol)
    return (embed_point(p[0]) ^ embed_point(p[1])) ^ embed_point(p[2])


def sphere_through(a1, a2, a3, a4, tol: float = DEFAULT_TOL) -> Multivector:
    """Grade-4 blade A1 ^ A2 ^ A3 ^ A4; flat (a plane) when coplanar."""
    p = [as_vec3(q) for q in (a1, a2, a3, a4)]
    _ensure_distinct(p, tol)
    blade = embed_point(p[0]) ^ embed_point(p[1])
    blade = blade ^ embed_point(p[2])
    return blade ^ embed_point(p[3])


def sphere_from_center_radius(center, radius: float,
                              tol: float = DEFAULT_TOL) -> Multivector:
    """Sphere as the wedge of four synthesized surface points
    c + r e1, c - r e1, c + r e2, c + r e3."""
    if radius <= 0.0:
        raise DegenerateGeometryError(f"sphere radius must be positive, got {radius}")
    c = as_vec3(center)
    return sphere_through(c + Vec3(radius, 0, 0), c - Vec3(radius, 0, 0),
                          c + Vec3(0, radius, 0), c + Vec3(0, 0, radius), tol)


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------
def is_flat(blade: Multivector, tol: float = DEFAULT_TOL) -> bool:
    """True when blade ^ n vanishes relative to the blade's own scale."""
    return (blade ^ al.n).max_abs() <= tol * max(1.0, blade.max_abs())


def is_collinear(a1, a2, a3, tol: float = DEFAULT_TOL) -> bool:
    """Collinearity test |A1 ^ A2 ^ A3 ^ n| < eps * scale."""
    p = [as_vec3(q) for q in (a1, a2, a3)]
    blade = (embed_point(p[0]) ^ embed_point(p[1])) ^ embed_point(p[2])
    return (blade ^ al.n).max_abs() <= tol * _point_scale(p) ** 3


def is_coplanar(a1, a2, a3, a4, tol: float = DEFAULT_TOL) -> bool:
    p = [as_vec3(q) for q in (a1, a2, a3, a4)]
    blade = embed_point(p[0]) ^ embed_point(p[1])
    blade = (blade ^ embed_point(p[2])) ^ embed_point(p[3])
    return (blade ^ al.n).max_abs() <= tol * _point_scale(p) ** 4


# ---------------------------------------------------------------------------
# parameter extraction
# ---------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class CircleParams:
    center: Vec3
    radius: float
    plane: Vec3               # bivector components on (i1, i2, i3) = plane axis
    plane_n: Multivector      # the auxiliary blade F = B N


@dataclass(frozen=True, slots=True)
class SphereParams:
    center: Vec3
    radius: float


@dataclass(frozen=True, slots=True)
class LineParams:
    moment: Vec3              # bivector a1 ^ a2 on (i1, i2, i3) = a1 x a2
    direction: Vec3           # a2 - a1
    base: Vec3                # foot of the perpendicular from the origin
    unit: Vec3                # direction normalized

    def point_at(self, t: float) -> Vec3:
        return self.base + self.unit.scaled(t)


def _round_center(blade: Multivector, tol: float) -> Vec3:
    # Reflection of infinity in the round blade: blade n blade is a
    # grade-1 conformal representative of the center for circles and
    # spheres alike.  The printed division form -F/(F.n) is undefined
    # here (F.n is a null blade), and any overall scale cancels in
    # extract_point, so the sandwich is used throughout.
    return extract_point(blade * al.n * blade, tol)


def circle_params(blade: Multivector, tol: float = DEFAULT_TOL) -> CircleParams:
    """Center, radius and carrier plane of a round grade-3 blade."""
    flat_part = blade ^ al.n
    if flat_part.max_abs() <= tol * max(1.0, blade.max_abs()):
        raise FlatGeometryError("blade is a line, not a circle")
    denom = flat_part.scalar_product(flat_part)
    r_sq = -blade.scalar_product(blade) / denom
    if r_sq <= 0.0:
        raise DegenerateGeometryError(f"imaginary circle (r^2 = {r_sq})")
    # Carrier plane orientation from the flat part V ^ n (the plane blade
    # through the circle): its i_k N slots hold the oriented plane bivector.
    # The blade's own i_k n slots weight each side by squared point norms
    # and are parallel to the carrier only for origin-centered data.
    cf = flat_part.coefficients()
    plane = Vec3(-cf[26], -cf[28], -cf[30])
    plane_mv = euclid_bivector_mv(plane.x, plane.y, plane.z)
    return CircleParams(center=_round_center(blade, tol),
                        radius=math.sqrt(r_sq),
                        plane=plane,
                        plane_n=plane_mv * al.N)


def sphere_params(blade: Multivector, tol: float = DEFAULT_TOL) -> SphereParams:
    """Center and radius of a round grade-4 blade.

    r^2 = +<VV>/<(V^n)(V^n)> (sign opposite to the circle case).  The
    center comes from the pseudoscalar dual I V, a grade-1 representative
    of the center; extract_point renormalizes, so the 1/(2 r^3) factor of
    the printed center formula drops out.
    """
    flat_part = blade ^ al.n
    if flat_part.max_abs() <= tol * max(1.0, blade.max_abs()):
        raise FlatGeometryError("blade is a plane, not a sphere")
    denom = flat_part.scalar_product(flat_part)
    r_sq = blade.scalar_product(blade) / denom
    if r_sq <= 0.0:
        raise DegenerateGeometryError(f"imaginary sphere (r^2 = {r_sq})")
    return SphereParams(center=extract_point(blade.dual(), tol),
                        radius=math.sqrt(r_sq))


def line_params(blade: Multivector, tol: float = DEFAULT_TOL) -> LineParams:
    """Moment, direction, base point and unit direction of a flat line blade
    (a1 ^ a2) n + (a2 - a1) N."""
    if not is_flat(blade, tol):
        raise FlatGeometryError("blade is a circle, not a line")
    c = blade.coefficients()
    moment = Vec3(c[_SLOTS_IKN[0]], c[_SLOTS_IKN[1]], c[_SLOTS_IKN[2]])
    direction = Vec3(-c[_SLOTS_EKN_BLOCK1[0]], -c[_SLOTS_EKN_BLOCK1[1]],
                     -c[_SLOTS_EKN_BLOCK1[2]])
    scale = max(1.0, blade.max_abs())
    if direction.max_abs() <= tol * scale:
        raise DegenerateGeometryError("line blade has zero direction")
    # Foot of the perpendicular from the origin: base = x - d with x = 0,
    # where d is the distance vector of the origin from the line.
    d0, _ = _distance_vector(Vec3(), moment, direction)
    unit = direction.normalized()
    return LineParams(moment=moment, direction=direction, base=-d0, unit=unit)


def _distance_vector(x: Vec3, moment: Vec3, direction: Vec3) -> tuple[Vec3, float]:
    """Distance vector d = <(x ^ dir - moment) dir^-1>_1 from x to the line;
    d points from the foot of the perpendicular toward x."""
    x_mv = euclid_vector_mv(x)
    dir_mv = euclid_vector_mv(direction)
    mom_mv = euclid_bivector_mv(moment.x, moment.y, moment.z)
    d_mv = (((x_mv ^ dir_mv) - mom_mv) * dir_mv.blade_inverse()).grade(1)
    c = d_mv.coefficients()
    d = Vec3(-c[27], -c[29], -c[31])
    return d, d.norm()


def point_line_distance(x, line: LineParams) -> tuple[Vec3, float]:
    """Distance vector and scalar distance of point x from the line."""
    return _distance_vector(as_vec3(x), line.moment, line.direction)
