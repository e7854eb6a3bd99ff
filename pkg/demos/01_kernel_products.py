"""Tour of the Cl(4,1) kernel: the three-level product and its relatives.

The 32-dimensional conformal algebra is stored as four complex
quaternions attached to {1, n, nbar, N}.  This script walks through the
basis constants, the fundamental null-vector products, grades,
conjugations and the derived products.
"""

from cgsketch import algebra as al

# Basis constants: each occupies exactly one of the 32 canonical slots.
for name, mv in al.basis_constants().items():
    print(f"{name:>5} = {mv!r}")

print()
print("n * n        =", repr(al.n * al.n), "          # null vector")
print("nbar * nbar  =", repr(al.nbar * al.nbar))
print("n * nbar     =", repr(al.n * al.nbar), "  # -1 + N")
print("N * N        =", repr(al.N * al.N))
print("I * I        =", repr(al.I * al.I), "        # pseudoscalar squares to -1")

# The Euclidean bivectors i1 = e2e3, i2 = e3e1, i3 = e1e2 behave like
# quaternion units with the orientation fixed by those definitions:
print()
print("e1 ^ e2      =", repr(al.e1 ^ al.e2), "         # the bivector i3")
print("i1 * i2      =", repr(al.i1 * al.i2), "        # note the sign: -i3")
print("i2 * i1      =", repr(al.i2 * al.i1))

# Grade machinery: a mixed element splits into its six grade parts.
m = al.one + al.e1 + (al.e1 ^ al.e2) + al.I
print()
print("mixed element m:")
for g in range(6):
    part = m.grade(g)
    if part.max_abs():
        print(f"  grade {g}: {part!r}")

# Reversion flips grades 2,3 and grade involution flips all odd grades.
print()
print("~i           =", repr(al.i.reverse()), "         # reversed trivector")
print("involute(e1) =", repr(al.e1.involute()))

# Derived products: outer, contractions, scalar product.
print()
print("e1 lc i3     =", repr(al.e1.left_contract(al.i3)))
print("i3 lc e1     =", repr(al.i3.left_contract(al.e1)), "# higher onto lower: 0")
print("e1 * e1 (sp) =", al.e1.scalar_product(al.e1))

# Exponentials: a bivector with square -1 exponentiates to a rotor...
import math
rotor = (al.i3.scaled(-math.pi / 4)).exp()
print()
print("exp(-(pi/4) i3) =", repr(rotor))
# ...and a nilpotent n-generator terminates after its linear term.
half_na = (al.n * al.e1).scaled(0.5)
print("exp(n e1 / 2)   =", repr(half_na.exp()))
