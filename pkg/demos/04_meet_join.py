"""Set operations on subspaces: join, meet, projection, intersections.

The join spans two blades, the meet cuts them against each other inside
the join, and a sphere meets a line in a point pair whose decomposition
yields two, one or zero Euclidean points.
"""

from cgsketch import (
    embed_point,
    join,
    line_through,
    meet,
    project,
    sphere_from_center_radius,
    sphere_line_intersect,
)
from cgsketch import algebra as al

# Join of two distinct points is simply their wedge (a point pair).
A, B = embed_point((1, 0, 0)), embed_point((0, 2, 0))
print("join(A, B) grades:", join(A, B).grades(1e-12))

# Two coplanar lines join into their common plane and meet in a point.
l1 = line_through((0, 1, 0), (1, 0, 0))    # x + y = 1 in the z = 0 plane
l2 = line_through((0, 0, 0), (0, 1, 0))    # the y axis
plane = join(l1, l2)
print("join of coplanar lines, grades:", plane.grades(1e-9))
crossing = meet(l1, l2, plane)
print("meet blade:", repr(crossing), "   # flat point at (0, 1, 0)")

# Projection: (m lc B) lc B^-1 is idempotent and drops orthogonal parts.
print("project e1+e3 onto e1^e2:", repr(project(al.e1 + al.e3, al.e1 ^ al.e2)))

# The showcase: sphere vs line in one algebraic pipeline.
sphere = sphere_from_center_radius((0, 0, 0), 1.0)
for height, label in ((0.0, "secant"), (1.0, "tangent"), (2.0, "miss")):
    line = line_through((0, height, 0), (1, height, 0))
    res = sphere_line_intersect(sphere, line)
    print(f"line at y={height}: {label:8s} ->", res.kind,
          [p.as_tuple() for p in res.points])
