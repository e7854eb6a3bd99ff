"""Conformal entities: null points, pairs, lines, circles and spheres.

Euclidean data rides inside algebra elements: a point becomes the null
vector X = x + (x*x/2) n + nbar, and wedging points together builds the
higher entities.  Parameters (center, radius, moment, ...) come back out
of single algebraic expressions.
"""

from cgsketch import (
    circle_params,
    circle_through,
    decompose_point_pair,
    embed_point,
    extract_point,
    line_params,
    line_through,
    point_distance,
    point_line_distance,
    sphere_from_center_radius,
    sphere_params,
    sphere_through,
)

# Points embed as null vectors and come back exactly.
X = embed_point((1, 2, 3))
print("embed(1,2,3)      =", repr(X))
print("X * X             =", (X * X).max_abs(), "   # null")
print("extract           =", extract_point(X))

# The scalar product measures distance: -2 A*B = |a-b|^2.
A, B = embed_point((0, 0, 0)), embed_point((3, 4, 0))
print("distance((0,0,0),(3,4,0)) =", point_distance(A, B))

# A point pair A ^ B remembers both points.
pair = embed_point((1, 0, 0)) ^ embed_point((0, 2, 0))
dec = decompose_point_pair(pair)
print("pair decomposes to", dec.kind, [p.as_tuple() for p in dec.points])

# Lines are wedges with the infinity vector; their blade stores the
# moment bivector and the direction.
line = line_through((0, 1, 0), (1, 1, 0))
lp = line_params(line)
print("line: base", lp.base.as_tuple(), "direction", lp.direction.as_tuple(),
      "moment", lp.moment.as_tuple())
d_vec, dist = point_line_distance((0, 0, 0), lp)
print("origin distance to line:", dist)

# Circles through three points: radius, center, carrier plane.
circ = circle_through((1, 0, 1), (0, 1, 1), (-1, 0, 1))
cp = circle_params(circ)
print("circle: center", cp.center.as_tuple(), "radius", cp.radius,
      "plane axis", cp.plane.normalized().as_tuple())

# Spheres through four points, or synthesized from center and radius.
sph = sphere_through((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1))
print("sphere by 4 points:", sphere_params(sph))
sph2 = sphere_from_center_radius((1, 1, 1), 2.0)
print("sphere by center/radius round-trips:", sphere_params(sph2))
