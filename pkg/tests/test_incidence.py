"""Join/meet/projection and the sphere-line intersection pipeline, checked
against the scalar quadratic oracle."""

import math

import numpy as np
import pytest

import euclid_oracles as eo
from cgsketch import algebra as al
from cgsketch.entities import (
    Vec3,
    embed_point,
    line_through,
    sphere_from_center_radius,
    sphere_through,
)
from cgsketch.errors import DegenerateGeometryError, FlatGeometryError
from cgsketch.incidence import (
    incidence_residual,
    join,
    lone_null_factor,
    meet,
    project,
    sphere_line_intersect,
)

SEED = 777


def vec(rng, scale=3.0):
    return Vec3(*rng.uniform(-scale, scale, 3))


def blades_proportional(a, b, tol=1e-9):
    scale = a.max_abs() / b.max_abs()
    return min((a - b.scaled(scale)).max_abs(),
               (a + b.scaled(scale)).max_abs()) <= tol * max(1.0, a.max_abs())


# ---------------------------------------------------------------------------
# projection
# ---------------------------------------------------------------------------
def test_project_examples():
    assert (project(al.e1, al.e1 ^ al.e2) - al.e1).max_abs() < 1e-12
    assert (project(al.e1 + al.e3, al.e1 ^ al.e2) - al.e1).max_abs() < 1e-12
    assert project(al.e3, al.e1 ^ al.e2).max_abs() < 1e-12


def test_project_idempotent_and_scale_free():
    rng = np.random.default_rng(SEED)
    blades = [
        al.e1 ^ al.e2,
        (al.e1 + al.e3.scaled(0.5)) ^ al.e2,
        line_through((0, 1, 0), (1, 1, 2)),
        sphere_through((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1)),
        al.I,
    ]
    for blade in blades:
        for scale in (1.0, -2.5):
            onto = blade.scaled(scale)
            m = al.Multivector.from_coefficients(rng.uniform(-1, 1, 32))
            once = project(m, onto)
            twice = project(once, onto)
            assert (twice - once).max_abs() < 1e-10 * max(1.0, once.max_abs())


def test_project_null_blade_rejected():
    with pytest.raises(DegenerateGeometryError):
        project(al.e1, al.n)


# ---------------------------------------------------------------------------
# join
# ---------------------------------------------------------------------------
def test_join_disjoint_points():
    a, b = embed_point((1, 0, 0)), embed_point((0, 2, 0))
    assert (join(a, b) - (a ^ b)).max_abs() == 0.0


def test_join_total_overlap():
    blade = line_through((0, 0, 0), (1, 2, 0))
    assert blades_proportional(join(blade, blade), blade)


def test_join_line_and_sphere_is_pseudoscalar():
    sphere = sphere_through((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1))
    line = line_through((0, 0, 0), (1, 0, 0))
    joined = join(sphere, line)
    assert blades_proportional(joined, al.I)


def test_join_containment():
    rng = np.random.default_rng(SEED + 1)
    for _ in range(30):
        a1, a2, a3 = vec(rng), vec(rng), vec(rng)
        if (a2 - a1).cross(a3 - a1).norm() < 1e-2:
            continue
        w = line_through(a1, a2)
        v = line_through(a1, a3)        # shares point a1: not disjoint
        joined = join(w, v)
        for part in (w, v):
            back = project(part, joined)
            assert blades_proportional(back, part, 1e-9)


def test_join_overlapping_lines_gives_plane():
    w = line_through((0, 0, 0), (1, 0, 0))
    v = line_through((0, 0, 0), (0, 1, 0))
    joined = join(w, v)
    # plane through origin spanned by e1, e2: flat grade-4 blade
    assert joined.grades(1e-12) == (4,)
    assert (joined ^ al.n).max_abs() < 1e-12


# ---------------------------------------------------------------------------
# meet
# ---------------------------------------------------------------------------
def test_meet_self_is_identity():
    blade = line_through((0, 1, 0), (2, 1, 1))
    met = meet(blade, blade, blade)
    assert blades_proportional(met, blade)


def test_meet_coplanar_lines_flat_point():
    # y-axis and the line x + y = 1 in the z = 0 plane meet at (0, 1, 0)
    w = line_through((0, 1, 0), (1, 0, 0))
    v = line_through((0, 0, 0), (0, 1, 0))
    j = join(w, v)
    met = meet(w, v, j)
    flat_point = embed_point((0, 1, 0)) ^ al.n
    assert blades_proportional(met, flat_point, 1e-9)


def test_meet_degenerate_join_rejected():
    with pytest.raises(DegenerateGeometryError):
        meet(al.e1, al.e1, al.n)   # null join blade


def test_meet_grade_arithmetic():
    sphere = sphere_from_center_radius((0, 0, 0), 1.0)
    line = line_through((0, 0, 0), (1, 0, 0))
    met = meet(sphere, line, al.I)
    assert met.grades(1e-9 * met.max_abs()) == (2,)


# ---------------------------------------------------------------------------
# sphere-line intersection
# ---------------------------------------------------------------------------
def test_sphere_line_two_points():
    sphere = sphere_from_center_radius((0, 0, 0), 1.0)
    line = line_through((0, 0, 0), (1, 0, 0))
    res = sphere_line_intersect(sphere, line)
    assert res.kind == "two_points"
    got = sorted(p.as_tuple() for p in res.points)
    assert np.abs(np.array(got) - [(-1, 0, 0), (1, 0, 0)]).max() < 1e-9


def test_sphere_line_tangent():
    sphere = sphere_from_center_radius((0, 0, 0), 1.0)
    line = line_through((0, 1, 0), (1, 1, 0))
    res = sphere_line_intersect(sphere, line)
    assert res.kind == "one_point"
    assert (res.points[0] - Vec3(0, 1, 0)).max_abs() < 1e-9


def test_sphere_line_miss():
    sphere = sphere_from_center_radius((0, 0, 0), 1.0)
    line = line_through((0, 2, 0), (1, 2, 0))
    res = sphere_line_intersect(sphere, line)
    assert res.kind == "none"
    assert res.points == ()


def test_sphere_line_type_checks():
    sphere = sphere_from_center_radius((0, 0, 0), 1.0)
    plane = sphere_through((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))
    circle3 = (embed_point((1, 0, 0)) ^ embed_point((0, 1, 0))) ^ embed_point((-1, 0, 0))
    line = line_through((0, 0, 0), (1, 0, 0))
    with pytest.raises(FlatGeometryError):
        sphere_line_intersect(plane, line)
    with pytest.raises(FlatGeometryError):
        sphere_line_intersect(sphere, circle3)


def test_sphere_line_random_against_quadratic_oracle():
    rng = np.random.default_rng(SEED + 2)
    checked = 0
    while checked < 1000:
        center = vec(rng, 2.0)
        radius = float(rng.uniform(0.3, 2.5))
        base = vec(rng, 2.5)
        direction = vec(rng).normalized()
        disc = eo.sphere_line_discriminant(center.as_tuple(), radius,
                                           base.as_tuple(), direction.as_tuple())
        if abs(disc) < 1e-6:
            continue   # keep clear of the knife edge; tangency is swept below
        checked += 1
        sphere = sphere_from_center_radius(center, radius)
        line = line_through(base, base + direction)
        res = sphere_line_intersect(sphere, line)
        hits = eo.sphere_line_hits(center.as_tuple(), radius,
                                   base.as_tuple(), direction.as_tuple())
        want_kind = {0: "none", 1: "one_point", 2: "two_points"}[len(hits)]
        assert res.kind == want_kind, (center, radius, base, direction)
        if hits:
            got = sorted(p.as_tuple() for p in res.points)
            want = sorted(tuple(h) for h in hits)
            assert np.abs(np.array(got) - np.array(want)).max() < 1e-8
            for p in res.points:
                assert incidence_residual(p, sphere) < 1e-8
                assert incidence_residual(p, line) < 1e-8


def test_sphere_line_tangency_sweep():
    # line y = d sweeping through tangency with the unit sphere at d = 1
    sphere = sphere_from_center_radius((0, 0, 0), 1.0)
    last_two = 0.0
    first_none = None
    for d in np.linspace(0.9, 1.1, 81):
        line = line_through((0, float(d), 0), (1, float(d), 0))
        res = sphere_line_intersect(sphere, line)
        disc = 1.0 - d * d
        if disc > 1e-6:
            assert res.kind == "two_points"
            got = sorted(p.as_tuple() for p in res.points)
            want = sorted([(-math.sqrt(disc), float(d), 0.0),
                           (math.sqrt(disc), float(d), 0.0)])
            assert np.abs(np.array(got) - np.array(want)).max() < 1e-8
            last_two = d
        elif disc < -1e-6:
            assert res.kind == "none"
            if first_none is None:
                first_none = d
    # the classification flips inside the narrow band around d = 1
    assert last_two < 1.0 < first_none
    exact = sphere_line_intersect(sphere, line_through((0, 1, 0), (2, 1, 0)))
    assert exact.kind == "one_point"
    assert (exact.points[0] - Vec3(0, 1, 0)).max_abs() < 1e-8


def test_lone_null_factor_detection():
    # an offset line carries n but not nbar (the origin is not on it)
    line = line_through((0, 1, 0), (1, 1, 0))
    assert lone_null_factor(line) == "n"
    # a line through the origin carries both null vectors: not lone
    assert lone_null_factor(line_through((0, 0, 0), (1, 0, 0))) is None
    pair = embed_point((1, 1, 0)) ^ embed_point((2, 0, 1))
    assert lone_null_factor(pair) is None
    down = al.e1 ^ al.nbar
    assert lone_null_factor(down) == "nbar"
