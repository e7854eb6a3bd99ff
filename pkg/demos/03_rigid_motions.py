"""Rotors, translators and motors: every rigid motion is a sandwich.

One versor V moves *any* entity the same way: m -> V m ~V.  Points,
lines, circles and spheres all transform by the identical formula, which
is the whole charm of the conformal model.
"""

import math

from cgsketch import (
    RotorSpec,
    apply_versor,
    circle_params,
    circle_through,
    compose_motor,
    embed_point,
    make_rotor,
    make_rotor_about,
    make_translator,
    point_distance,
)
from cgsketch import algebra as al
from cgsketch.entities import euclid_bivector_mv

# A rotor in the e1-e2 plane: positive angle turns e1 toward e2.
rotor = make_rotor(al.i3, math.pi / 2)
print("rotor:", repr(rotor.mv))
print("(1,0,0) ->", rotor.apply_point((1, 0, 0)).as_tuple())

# A translator is 1 + n a / 2 -- the series ends because n is null.
mover = make_translator((1, 2, 0))
print("translator moves origin to", mover.apply_point((0, 0, 0)).as_tuple())

# Rotation about an arbitrary center: conjugate the rotor by a translator.
pivot = make_rotor_about(al.i3, math.pi, (1, 0, 0))
print("half turn about (1,0,0): origin ->", pivot.apply_point((0, 0, 0)).as_tuple())
print("the center stays put:", pivot.apply_point((1, 0, 0)).as_tuple())

# Motors chain a translation onto a centered rotation; distances survive.
motor = compose_motor((0, 0, 1), RotorSpec(euclid_bivector_mv(0, 1, 0),
                                           math.pi / 3, (1, 1, 0)))
print("motor unit error:", motor.unit_error())
a, b = (0.5, -1, 2), (2, 0.25, -1)
before = point_distance(embed_point(a), embed_point(b))
after = point_distance(embed_point(motor.apply_point(a)),
                       embed_point(motor.apply_point(b)))
print("distance before/after motor:", before, after)

# The same motor applied to a whole circle moves its parameters rigidly.
circ = circle_through((1, 0, 0), (0, 1, 0), (-1, 0, 0))
moved = apply_versor(motor, circ)
print("moved circle center:", circle_params(moved).center.as_tuple())
print("matches moved old center:",
      motor.apply_point(circle_params(circ).center).as_tuple())
