"""Three-level kernel for the conformal geometric algebra Cl(4,1).

The 32-dimensional algebra is built from three nested levels:

* level 1 -- complex scalars over {1, I}, where I is the grade-5
  pseudoscalar with I*I = -1.  Python's built-in ``complex`` is an exact
  model of this sub-algebra (I maps to ``1j``), so it is used directly.
* level 2 -- :class:`ComplexQuat`, quaternion-like elements over
  {1, i1, i2, i3} with complex-scalar coefficients.  The units are the
  Euclidean bivectors i1 = e2 e3, i2 = e3 e1, i3 = e1 e2, which gives the
  orientation i1*i2 = -i3 (cyclic); squares are -1.
* level 3 -- :class:`Multivector`, four quaternion blocks attached to
  {1, n, nbar, N}, where n and nbar are the null vectors for infinity and
  origin and N = n ^ nbar.  The sixteen-term block product below follows
  from the {1, n, nbar, N} table (n*n = nbar*nbar = 0, n*nbar = -1 + N,
  nbar*n = -1 - N, N*n = -n, n*N = n, N*nbar = nbar, nbar*N = -nbar,
  N*N = 1) together with the fact that the quaternion blocks commute with
  n, nbar and N.

Every multivector therefore carries 32 real coefficients.  The canonical
slot order (used by :meth:`Multivector.coefficients` and JSON payloads) is
block order 1, n, nbar, N, and within each block s.re, s.im, v1.re, v1.im,
v2.re, v2.im, v3.re, v3.im.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ConvergenceError,
    IndefiniteMagnitudeError,
    InverseError,
    NormalizationError,
)

ComplexScalar = complex
"""Coefficient ring over {1, I}; ``1j`` plays the role of I (I*I = -1)."""

DEFAULT_TOL = 1e-9

EXP_TERM_TOL = 1e-15
EXP_MAX_TERMS = 64

_ZERO = 0j


@dataclass(frozen=True, slots=True)
class ComplexQuat:
    """Quaternion-like element over {1, i1, i2, i3} with complex coefficients.

    The vector units are the Euclidean bivectors i1 = e2 e3, i2 = e3 e1,
    i3 = e1 e2, so the product orientation is i1*i2 = -i3 (and cyclic),
    with i1*i1 = i2*i2 = i3*i3 = -1.
    """

    s: complex = _ZERO
    v1: complex = _ZERO
    v2: complex = _ZERO
    v3: complex = _ZERO

    def __add__(self, other: "ComplexQuat") -> "ComplexQuat":
        return ComplexQuat(self.s + other.s, self.v1 + other.v1,
                           self.v2 + other.v2, self.v3 + other.v3)

    def __sub__(self, other: "ComplexQuat") -> "ComplexQuat":
        return ComplexQuat(self.s - other.s, self.v1 - other.v1,
                           self.v2 - other.v2, self.v3 - other.v3)

    def __neg__(self) -> "ComplexQuat":
        return ComplexQuat(-self.s, -self.v1, -self.v2, -self.v3)

    def scaled(self, factor: complex) -> "ComplexQuat":
        return ComplexQuat(self.s * factor, self.v1 * factor,
                           self.v2 * factor, self.v3 * factor)

    def __mul__(self, other: "ComplexQuat") -> "ComplexQuat":
        ps, p1, p2, p3 = self.s, self.v1, self.v2, self.v3
        qs, q1, q2, q3 = other.s, other.v1, other.v2, other.v3
        return ComplexQuat(
            ps * qs - (p1 * q1 + p2 * q2 + p3 * q3),
            ps * q1 + p1 * qs + (p3 * q2 - p2 * q3),
            ps * q2 + p2 * qs + (p1 * q3 - p3 * q1),
            ps * q3 + p3 * qs + (p2 * q1 - p1 * q2),
        )

    def is_zero(self) -> bool:
        return self.s == 0 and self.v1 == 0 and self.v2 == 0 and self.v3 == 0


_ZQ = ComplexQuat()

# Canonical slot metadata.  Index = block*8 + component*2 + part with
# blocks (1, n, nbar, N), components (s, v1, v2, v3), parts (re, im).
SLOT_LABELS: tuple[str, ...] = (
    "1", "I", "i1", "Ii1", "i2", "Ii2", "i3", "Ii3",
    "n", "In", "i1n", "e1n", "i2n", "e2n", "i3n", "e3n",
    "nbar", "Inbar", "i1nbar", "e1nbar", "i2nbar", "e2nbar", "i3nbar", "e3nbar",
    "N", "i", "i1N", "e1", "i2N", "e2", "i3N", "e3",
)

SLOT_GRADES: tuple[int, ...] = (
    0, 5, 2, 3, 2, 3, 2, 3,
    1, 4, 3, 2, 3, 2, 3, 2,
    1, 4, 3, 2, 3, 2, 3, 2,
    2, 3, 4, 1, 4, 1, 4, 1,
)

# The slot at index k literally stores the coefficient of the product
# I^part * i_component * block-factor.  For six slots that product is the
# *negative* of the geometric entity the label names (I i_k N = -e_k and
# I i_k nbar = -e_k nbar), so the human-readable form flips those signs.
SLOT_TEXT_SIGNS: tuple[float, ...] = tuple(
    -1.0 if label in ("e1", "e2", "e3", "e1nbar", "e2nbar", "e3nbar") else 1.0
    for label in SLOT_LABELS
)

# Reversion multiplies grade g by (-1)^(g(g-1)/2): +,+,-,-,+,+ for 0..5.
_REVERSE_SIGNS: tuple[float, ...] = tuple(
    1.0 if g % 4 in (0, 1) else -1.0 for g in SLOT_GRADES
)
_INVOLUTE_SIGNS: tuple[float, ...] = tuple(
    1.0 if g % 2 == 0 else -1.0 for g in SLOT_GRADES
)


def _quat_from_slots(c: Sequence[float], base: int) -> ComplexQuat:
    return ComplexQuat(
        complex(c[base], c[base + 1]),
        complex(c[base + 2], c[base + 3]),
        complex(c[base + 4], c[base + 5]),
        complex(c[base + 6], c[base + 7]),
    )


@dataclass(frozen=True, slots=True)
class Multivector:
    """Immutable element of Cl(4,1) stored as four complex quaternions.

    ``m = q + qn*n + qnbar*nbar + qN*N``.  All operations are pure
    functions; instances can be freely shared between threads.
    """

    q: ComplexQuat = _ZQ
    qn: ComplexQuat = _ZQ
    qnbar: ComplexQuat = _ZQ
    qN: ComplexQuat = _ZQ

    # ------------------------------------------------------------------
    # linear structure
    # ------------------------------------------------------------------
    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.q + other.q, self.qn + other.qn,
                           self.qnbar + other.qnbar, self.qN + other.qN)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.q - other.q, self.qn - other.qn,
                           self.qnbar - other.qnbar, self.qN - other.qN)

    def __neg__(self) -> "Multivector":
        return Multivector(-self.q, -self.qn, -self.qnbar, -self.qN)

    def scaled(self, factor: float) -> "Multivector":
        f = complex(factor)
        return Multivector(self.q.scaled(f), self.qn.scaled(f),
                           self.qnbar.scaled(f), self.qN.scaled(f))

    # ------------------------------------------------------------------
    # geometric product
    # ------------------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, Multivector):
            a, an, ab, aN = self.q, self.qn, self.qnbar, self.qN
            b, bn, bb, bN = other.q, other.qn, other.qnbar, other.qN
            return Multivector(
                a * b - an * bb - ab * bn + aN * bN,
                a * bn + an * b + an * bN - aN * bn,
                a * bb + ab * b - ab * bN + aN * bb,
                a * bN + aN * b + an * bb - ab * bn,
            )
        if isinstance(other, (int, float)):
            return self.scaled(float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scaled(float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self.scaled(1.0 / float(other))
        return NotImplemented

    # ------------------------------------------------------------------
    # coefficient access
    # ------------------------------------------------------------------
    def coefficients(self) -> tuple[float, ...]:
        """The 32 real coefficients in canonical slot order."""
        out = []
        for quat in (self.q, self.qn, self.qnbar, self.qN):
            for part in (quat.s, quat.v1, quat.v2, quat.v3):
                out.append(part.real)
                out.append(part.imag)
        return tuple(out)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[float]) -> "Multivector":
        c = [float(x) for x in coeffs]
        if len(c) != 32:
            raise ValueError(f"expected 32 coefficients, got {len(c)}")
        return cls(_quat_from_slots(c, 0), _quat_from_slots(c, 8),
                   _quat_from_slots(c, 16), _quat_from_slots(c, 24))

    def max_abs(self) -> float:
        return max(abs(x) for x in self.coefficients())

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_abs() <= tol

    # ------------------------------------------------------------------
    # grade operations
    # ------------------------------------------------------------------
    def grade(self, g: int) -> "Multivector":
        """The grade-g part; g outside 0..5 is rejected."""
        if not 0 <= g <= 5:
            raise ValueError(f"grade must be in 0..5, got {g}")
        c = self.coefficients()
        return Multivector.from_coefficients(
            v if SLOT_GRADES[k] == g else 0.0 for k, v in enumerate(c))

    def grades(self, tol: float = 0.0) -> tuple[int, ...]:
        """Grades with at least one coefficient of magnitude > tol."""
        c = self.coefficients()
        present = {SLOT_GRADES[k] for k, v in enumerate(c) if abs(v) > tol}
        return tuple(sorted(present))

    def reverse(self) -> "Multivector":
        c = self.coefficients()
        return Multivector.from_coefficients(
            v * _REVERSE_SIGNS[k] for k, v in enumerate(c))

    def __invert__(self) -> "Multivector":
        return self.reverse()

    def involute(self) -> "Multivector":
        """Grade involution: sign flip of all odd-grade parts."""
        c = self.coefficients()
        return Multivector.from_coefficients(
            v * _INVOLUTE_SIGNS[k] for k, v in enumerate(c))

    # ------------------------------------------------------------------
    # derived products
    # ------------------------------------------------------------------
    def scalar_product(self, other: "Multivector") -> float:
        """Grade-0 coefficient of the geometric product."""
        a, an, ab, aN = self.q, self.qn, self.qnbar, self.qN
        b, bn, bb, bN = other.q, other.qn, other.qnbar, other.qN
        block = a * b - an * bb - ab * bn + aN * bN
        return block.s.real

    def _graded_product(self, other: "Multivector", pick) -> "Multivector":
        acc = ZERO
        for r in self.grades():
            ar = self.grade(r)
            for s in other.grades():
                g = pick(r, s)
                if g is None or not 0 <= g <= 5:
                    continue
                acc = acc + (ar * other.grade(s)).grade(g)
        return acc

    def outer(self, other: "Multivector") -> "Multivector":
        return self._graded_product(other, lambda r, s: r + s)

    def __xor__(self, other: "Multivector") -> "Multivector":
        return self.outer(other)

    def left_contract(self, other: "Multivector") -> "Multivector":
        """Contraction of self (lower grades) onto other from the left."""
        return self._graded_product(other, lambda r, s: s - r)

    def right_contract(self, other: "Multivector") -> "Multivector":
        """Contraction of other (lower grades) onto self from the right."""
        return self._graded_product(other, lambda r, s: r - s)

    # ------------------------------------------------------------------
    # magnitude, inverse, powers
    # ------------------------------------------------------------------
    def magnitude_squared(self) -> float:
        """reverse(m) * m; may be negative for indefinite elements."""
        return self.reverse().scalar_product(self)

    def magnitude(self, tol: float = DEFAULT_TOL) -> float:
        m2 = self.magnitude_squared()
        if m2 < -tol:
            raise IndefiniteMagnitudeError(
                f"|m|^2 = {m2} is negative; element has no real magnitude")
        return math.sqrt(max(m2, 0.0))

    def normalized(self, tol: float = DEFAULT_TOL) -> "Multivector":
        m2 = self.magnitude_squared()
        if m2 <= tol:
            raise NormalizationError(
                f"cannot normalize element with |m|^2 = {m2}")
        return self.scaled(1.0 / math.sqrt(m2))

    def blade_inverse(self, tol: float = DEFAULT_TOL) -> "Multivector":
        """Inverse reverse(m)/|m|^2 of a single-grade, non-null element."""
        scale = self.max_abs()
        populated = self.grades(tol * max(scale, 1.0))
        if len(populated) != 1:
            raise InverseError(
                f"blade inverse needs a single-grade element, got grades {populated}")
        m2 = self.magnitude_squared()
        if abs(m2) <= tol * max(scale, 1.0) ** 2:
            raise InverseError("null blade has no inverse")
        return self.reverse().scaled(1.0 / m2)

    def power(self, k: int) -> "Multivector":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"power expects a non-negative integer, got {k!r}")
        acc = ONE
        for _ in range(k):
            acc = acc * self
        return acc

    def __pow__(self, k: int) -> "Multivector":
        return self.power(k)

    def exp(self, term_tol: float = EXP_TERM_TOL,
            max_terms: int = EXP_MAX_TERMS) -> "Multivector":
        """Power series sum_k m^k / k!, truncated when the next term's
        max-abs coefficient drops below ``term_tol``."""
        acc = ONE
        term = ONE
        for k in range(1, max_terms + 1):
            term = (term * self).scaled(1.0 / k)
            acc = acc + term
            if term.max_abs() < term_tol:
                return acc
        raise ConvergenceError(
            f"exponential did not converge within {max_terms} terms")

    def dual(self) -> "Multivector":
        """Multiplication by the pseudoscalar I (dual(dual(m)) = -m)."""
        return self * I

    # ------------------------------------------------------------------
    # text form
    # ------------------------------------------------------------------
    def lines(self) -> list[str]:
        """One ``<coefficient> <basis-label>`` line per nonzero slot."""
        out = []
        for k, v in enumerate(self.coefficients()):
            if v != 0.0:
                out.append(f"{v * SLOT_TEXT_SIGNS[k]} {SLOT_LABELS[k]}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines()) or "0"

    def __repr__(self) -> str:
        body = " + ".join(
            f"{v * SLOT_TEXT_SIGNS[k]}*{SLOT_LABELS[k]}"
            for k, v in enumerate(self.coefficients()) if v != 0.0)
        return f"Multivector({body or '0'})"


def parse_text(text: str) -> Multivector:
    """Inverse of :meth:`Multivector.lines` / ``str``; accepts '0'."""
    coeffs = [0.0] * 32
    stripped = text.strip()
    if stripped == "0" or not stripped:
        return Multivector.from_coefficients(coeffs)
    index = {label: k for k, label in enumerate(SLOT_LABELS)}
    for line in stripped.splitlines():
        value, label = line.split()
        k = index[label]
        coeffs[k] += float(value) * SLOT_TEXT_SIGNS[k]
    return Multivector.from_coefficients(coeffs)


def scalar(value: float) -> Multivector:
    return Multivector(q=ComplexQuat(s=complex(value)))


ZERO = Multivector()
ONE = scalar(1.0)

# Basis constants.  The e_k vectors live in the N block: e_k = -I i_k N,
# so their single nonzero slot value is -1 on the I i_k N position.
one = ONE
I = Multivector(q=ComplexQuat(s=1j))
i1 = Multivector(q=ComplexQuat(v1=1 + 0j))
i2 = Multivector(q=ComplexQuat(v2=1 + 0j))
i3 = Multivector(q=ComplexQuat(v3=1 + 0j))
n = Multivector(qn=ComplexQuat(s=1 + 0j))
nbar = Multivector(qnbar=ComplexQuat(s=1 + 0j))
N = Multivector(qN=ComplexQuat(s=1 + 0j))
i = Multivector(qN=ComplexQuat(s=1j))
e1 = Multivector(qN=ComplexQuat(v1=-1j))
e2 = Multivector(qN=ComplexQuat(v2=-1j))
e3 = Multivector(qN=ComplexQuat(v3=-1j))


def basis_constants() -> dict[str, Multivector]:
    """The named unit elements; each has exactly one nonzero slot."""
    return {
        "one": one, "e1": e1, "e2": e2, "e3": e3,
        "n": n, "nbar": nbar, "N": N, "I": I,
        "i1": i1, "i2": i2, "i3": i3, "i": i,
    }
