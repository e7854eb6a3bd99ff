"""The scene engine end to end: script a construction, move a point and
watch the dependents follow, then persist and export it.

Run from anywhere; files land in a `demo_out/` directory next to this
script.
"""

from pathlib import Path

from cgsketch.scene import Scene
from cgsketch.script import ScriptSession

out_dir = Path(__file__).parent / "demo_out"
out_dir.mkdir(exist_ok=True)

session = ScriptSession(Scene(), base_dir=out_dir)
session.run_text("""
# a unit sphere around the origin and a secant line
point 0 0 0
point -2 0 0
point 2 0 0
sphere_cr 0 1
line 1 2
intersect 3 4          # creates two derived points
params 5
params 6
""")

print("\nnow drag one line endpoint upward; the intersections follow:")
session.run_text("""
move 1 -2 0.5 0
params 5
params 6
""")

print("\n...and out of reach; the derived points survive but gray out:")
session.run_text("""
move 1 -2 3 0
""")
for nid in (5, 6):
    node = session.scene.node(nid)
    print(f"node {nid}: valid={node.valid}")

session.run_text("""
move 1 -2 0 0          # back again: they spring back to life
save construction.json
export construction.svg
""")
print("\nwrote", out_dir / "construction.json")
print("wrote", out_dir / "construction.svg")
print("derived points valid again:",
      [session.scene.node(nid).valid for nid in (5, 6)])
