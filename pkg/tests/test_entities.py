"""Conformal entity tests: embeddings, point pairs, circles, spheres, lines,
all validated against classical Euclidean oracles."""

import numpy as np
import pytest

import euclid_oracles as eo
from cgsketch import algebra as al
from cgsketch.entities import (
    Vec3,
    circle_params,
    circle_through,
    decompose_point_pair,
    embed_point,
    extract_point,
    is_collinear,
    is_coplanar,
    is_flat,
    line_params,
    line_through,
    point_distance,
    point_line_distance,
    sphere_from_center_radius,
    sphere_params,
    sphere_through,
)
from cgsketch.errors import (
    DegenerateGeometryError,
    FlatGeometryError,
    RepresentationError,
)

SEED = 90210


def vec(rng, scale=3.0):
    return Vec3(*rng.uniform(-scale, scale, 3))


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------
def test_embed_origin_is_nbar():
    assert embed_point((0, 0, 0)).coefficients() == al.nbar.coefficients()


def test_embed_explicit():
    want = (al.e1 + al.e2.scaled(2) + al.e3.scaled(3)
            + al.n.scaled(7) + al.nbar)
    assert embed_point((1, 2, 3)).coefficients() == want.coefficients()


def test_embed_null_property():
    rng = np.random.default_rng(SEED)
    for _ in range(200):
        x = vec(rng, 10.0)
        pt = embed_point(x)
        bound = 1e-12 * (1.0 + x.norm_squared()) ** 2
        assert (pt * pt).max_abs() <= bound


def test_extract_round_trip():
    assert extract_point(al.nbar) == Vec3(0, 0, 0)
    rng = np.random.default_rng(SEED + 1)
    for _ in range(100):
        x = vec(rng)
        assert extract_point(embed_point(x)) == x
    # scale invariance of the representative
    assert extract_point(embed_point((1, 0, 0)).scaled(2.0)) == Vec3(1, 0, 0)


def test_extract_point_at_infinity():
    with pytest.raises(FlatGeometryError):
        extract_point(al.n)


def test_point_distance():
    a = embed_point((0, 0, 0))
    b = embed_point((3, 4, 0))
    assert point_distance(a, b) == 5.0
    assert point_distance(a, a) == 0.0
    rng = np.random.default_rng(SEED + 2)
    for _ in range(1000):
        x, y = vec(rng), vec(rng)
        want = (x - y).norm()
        got = point_distance(embed_point(x), embed_point(y))
        assert abs(got - want) <= 1e-12 * max(1.0, want)


def test_point_distance_representation_error():
    with pytest.raises(RepresentationError):
        point_distance(al.e1, al.e1)   # e1*e1 = 1 -> radicand -2


# ---------------------------------------------------------------------------
# point pairs
# ---------------------------------------------------------------------------
def pair_blade(a, b):
    return embed_point(a) ^ embed_point(b)


def assert_pair_roundtrip(a, b, tol=1e-9):
    dec = decompose_point_pair(pair_blade(a, b))
    assert dec.kind == "two_points"
    got = sorted(p.as_tuple() for p in dec.points)
    want = sorted(p.as_tuple() for p in (a, b))
    for g, w in zip(got, want):
        assert max(abs(gi - wi) for gi, wi in zip(g, w)) <= tol


def test_pair_round_trip_simple():
    assert_pair_roundtrip(Vec3(1, 0, 0), Vec3(0, 2, 0))


def test_pair_round_trip_gamma_zero():
    # equal-norm points make gamma = a^2 - b^2 vanish: translator fallback
    assert_pair_roundtrip(Vec3(1, 0, 0), Vec3(0, 1, 0))
    rng = np.random.default_rng(SEED + 3)
    for _ in range(200):
        a = vec(rng)
        q = vec(rng).normalized()
        b = (-a) + q.scaled(2 * a.dot(q))   # reflection: |b| = |a|
        if (a - b).norm() < 1e-6:
            continue
        assert_pair_roundtrip(a, b)


def test_pair_round_trip_random():
    rng = np.random.default_rng(SEED + 4)
    for _ in range(1000):
        a, b = vec(rng), vec(rng)
        if (a - b).norm() < 1e-6:
            continue
        assert_pair_roundtrip(a, b)


def test_pair_scale_invariance():
    a, b = Vec3(1, 2, -1), Vec3(0.5, -1, 2)
    for s in (2.0, -3.5, 0.25):
        dec = decompose_point_pair(pair_blade(a, b).scaled(s))
        got = sorted(p.as_tuple() for p in dec.points)
        want = sorted(p.as_tuple() for p in (a, b))
        for g, w in zip(got, want):
            assert max(abs(gi - wi) for gi, wi in zip(g, w)) <= 1e-9


def test_pair_degenerate():
    with pytest.raises(DegenerateGeometryError):
        decompose_point_pair(al.ZERO)
    # same point twice: the wedge vanishes entirely
    assert pair_blade(Vec3(1, 1, 1), Vec3(1, 1, 1)).max_abs() == 0.0


# ---------------------------------------------------------------------------
# lines
# ---------------------------------------------------------------------------
def test_line_through_basics():
    blade = line_through((0, 0, 0), (1, 0, 0))
    assert is_flat(blade)
    params = line_params(blade)
    assert params.moment == Vec3(0, 0, 0)
    assert params.direction == Vec3(1, 0, 0)
    assert params.base == Vec3(0, 0, 0)
    with pytest.raises(DegenerateGeometryError):
        line_through((1, 1, 1), (1, 1, 1))


def test_line_params_offset():
    params = line_params(line_through((0, 1, 0), (1, 1, 0)))
    assert params.direction == Vec3(1, 0, 0)
    # moment a1 x a2 = (0,1,0) x (1,1,0) = (0,0,-1)
    assert params.moment == Vec3(0, 0, -1)
    assert (params.base - Vec3(0, 1, 0)).max_abs() < 1e-12


def test_line_moment_direction_random():
    rng = np.random.default_rng(SEED + 5)
    for _ in range(100):
        a1, a2 = vec(rng), vec(rng)
        if (a1 - a2).norm() < 1e-6:
            continue
        params = line_params(line_through(a1, a2))
        assert (params.moment - a1.cross(a2)).max_abs() < 1e-12
        assert (params.direction - (a2 - a1)).max_abs() < 1e-12
        foot, dist = eo.line_point_distance((0, 0, 0), a1.as_tuple(),
                                            (a2 - a1).as_tuple())
        assert np.abs(np.array(params.base.as_tuple()) - foot).max() < 1e-9
        # parametrization points lie on the blade
        blade = line_through(a1, a2)
        for t in (0.0, 1.0, -2.5):
            residual = (embed_point(params.point_at(t)) ^ blade).max_abs()
            assert residual < 1e-8 * max(1.0, blade.max_abs())


def test_point_line_distance():
    line = line_params(line_through((0, 0, 0), (1, 0, 0)))
    d, dist = point_line_distance((0, 1, 0), line)
    assert dist == 1.0
    d, dist = point_line_distance((5.0, 0, 0), line)
    assert dist == 0.0 and d == Vec3(0, 0, 0)
    rng = np.random.default_rng(SEED + 6)
    for _ in range(1000):
        a1, a2, x = vec(rng), vec(rng), vec(rng)
        if (a1 - a2).norm() < 1e-6:
            continue
        line = line_params(line_through(a1, a2))
        d, dist = point_line_distance(x, line)
        foot, want = eo.line_point_distance(x.as_tuple(), a1.as_tuple(),
                                            (a2 - a1).as_tuple())
        assert abs(dist - want) < 1e-9
        assert np.abs(np.array((x - d).as_tuple()) - foot).max() < 1e-9


# ---------------------------------------------------------------------------
# circles
# ---------------------------------------------------------------------------
def test_circle_round_vs_flat():
    round_blade = circle_through((1, 0, 0), (0, 1, 0), (-1, 0, 0))
    assert not is_flat(round_blade)
    flat_blade = circle_through((0, 0, 0), (1, 0, 0), (2, 0, 0))
    assert is_flat(flat_blade)
    with pytest.raises(DegenerateGeometryError):
        circle_through((1, 0, 0), (1, 0, 0), (0, 1, 0))


def test_circle_incidence():
    pts = [(1, 0, 0), (0, 1, 0), (-1, 0, 0)]
    blade = circle_through(*pts)
    for p in pts:
        assert (embed_point(p) ^ blade).max_abs() < 1e-12


def test_circle_params_unit():
    params = circle_params(circle_through((1, 0, 0), (0, 1, 0), (-1, 0, 0)))
    assert abs(params.radius - 1.0) < 1e-12
    assert params.center.max_abs() < 1e-12
    plane = params.plane
    assert abs(plane.x) < 1e-12 and abs(plane.y) < 1e-12 and plane.z != 0.0


def test_circle_params_translated():
    params = circle_params(circle_through((1, 0, 1), (0, 1, 1), (-1, 0, 1)))
    assert abs(params.radius - 1.0) < 1e-12
    assert (params.center - Vec3(0, 0, 1)).max_abs() < 1e-9


def test_circle_params_scale_invariant():
    blade = circle_through((2, 1, -1), (0.5, 2, 3), (-1, 0.3, 1))
    p1 = circle_params(blade)
    p2 = circle_params(blade.scaled(-7.25))
    assert abs(p1.radius - p2.radius) < 1e-12
    assert (p1.center - p2.center).max_abs() < 1e-9


def test_circle_params_random_vs_oracle():
    rng = np.random.default_rng(SEED + 7)
    count = 0
    while count < 500:
        p1, p2, p3 = vec(rng), vec(rng), vec(rng)
        area = (p2 - p1).cross(p3 - p1).norm()
        if area < 1e-2:
            continue
        count += 1
        center, radius = eo.circumcircle(p1.as_tuple(), p2.as_tuple(), p3.as_tuple())
        params = circle_params(circle_through(p1, p2, p3))
        assert abs(params.radius - radius) < 1e-9 * max(1.0, radius)
        assert np.abs(np.array(params.center.as_tuple()) - center).max() < 1e-9 * max(1.0, radius)
        # carrier plane parallel to the oracle normal
        normal = (p2 - p1).cross(p3 - p1).normalized()
        plane = params.plane.normalized()
        cross = plane.cross(normal).norm()
        assert cross < 1e-9


def test_circle_params_flat_error():
    with pytest.raises(FlatGeometryError):
        circle_params(line_through((0, 0, 0), (1, 0, 0)))


def test_collinearity_classification():
    assert is_collinear((0, 0, 0), (1, 0, 0), (2, 0, 0))
    assert is_collinear((0, 0, 0), (1, 0, 0), (1, 0, 0))
    rng = np.random.default_rng(SEED + 8)
    for _ in range(200):
        a, d = vec(rng), vec(rng).normalized()
        # margin 1e-6 off the line -> not collinear
        off = d.cross(Vec3(1, 0, 0))
        if off.norm() < 1e-3:
            off = d.cross(Vec3(0, 1, 0))
        off = off.normalized().scaled(1e-6)
        assert not is_collinear(a, a + d, a + d.scaled(2) + off)
        # perturbation 1e-12 along -> still collinear
        tiny = off.scaled(1e-6)   # 1e-12 magnitude
        assert is_collinear(a, a + d, a + d.scaled(2) + tiny)


# ---------------------------------------------------------------------------
# spheres
# ---------------------------------------------------------------------------
def test_sphere_round_vs_flat():
    blade = sphere_through((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert not is_flat(blade)
    flat = sphere_through((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))
    assert is_flat(flat)
    assert is_coplanar((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))
    with pytest.raises(DegenerateGeometryError):
        sphere_through((1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_sphere_incidence():
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1)]
    blade = sphere_through(*pts)
    for p in pts:
        assert (embed_point(p) ^ blade).max_abs() < 1e-12


def test_sphere_params_unit():
    params = sphere_params(sphere_through((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert abs(params.radius - 1.0) < 1e-12
    assert params.center.max_abs() < 1e-12


def test_sphere_params_random_vs_oracle():
    rng = np.random.default_rng(SEED + 9)
    count = 0
    while count < 500:
        pts = [vec(rng) for _ in range(4)]
        vol = abs((pts[1] - pts[0]).cross(pts[2] - pts[0]).dot(pts[3] - pts[0]))
        if vol < 1e-2:
            continue
        count += 1
        center, radius = eo.circumsphere(*(p.as_tuple() for p in pts))
        params = sphere_params(sphere_through(*pts))
        assert abs(params.radius - radius) < 1e-9 * max(1.0, radius)
        assert np.abs(np.array(params.center.as_tuple()) - center).max() < 1e-9 * max(1.0, radius)


def test_sphere_params_flat_error():
    with pytest.raises(FlatGeometryError):
        sphere_params(sphere_through((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)))


def test_sphere_r2_sign_convention():
    rng = np.random.default_rng(SEED + 10)
    for _ in range(50):
        pts = [vec(rng) for _ in range(4)]
        vol = abs((pts[1] - pts[0]).cross(pts[2] - pts[0]).dot(pts[3] - pts[0]))
        if vol < 1e-2:
            continue
        blade = sphere_through(*pts)
        flat_part = blade ^ al.n
        r_sq = blade.scalar_product(blade) / flat_part.scalar_product(flat_part)
        assert r_sq > 0.0


def test_sphere_from_center_radius_round_trip():
    for center, radius in (((0, 0, 0), 1.0), ((1, 1, 1), 2.0),
                           ((0.5, -2.0, 4.0), 0.5), ((-3, 2, -1), 4.0)):
        blade = sphere_from_center_radius(center, radius)
        params = sphere_params(blade)
        assert params.center == Vec3(*center)
        assert params.radius == radius
    with pytest.raises(DegenerateGeometryError):
        sphere_from_center_radius((0, 0, 0), 0.0)


def test_sphere_from_center_radius_surface_points():
    c, r = Vec3(1, -2, 0.5), 1.75
    for offset in (Vec3(r, 0, 0), Vec3(-r, 0, 0), Vec3(0, r, 0), Vec3(0, 0, r)):
        assert abs((offset).norm() - r) < 1e-12
        assert (embed_point(c + offset) ^ sphere_from_center_radius(c, r)).max_abs() < 1e-9
