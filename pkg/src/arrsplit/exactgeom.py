"""Exact rational geometry in the projective and affine plane.

Lines and points are stored as canonically normalized integer triples:
denominators cleared, entries coprime, first nonzero entry positive.  Two
proportional triples therefore normalize to the identical tuple, so equality,
hashing and set membership are plain structural comparisons.  All arithmetic
is exact; no floating point enters any incidence decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EqualLinesError, LineAtInfinityError, ZeroTripleError

Rational = Fraction

Triple = tuple[int, int, int]


def canonical_triple(raw) -> Triple:
    """Scale a nonzero rational triple to coprime integers, first nonzero > 0."""
    fracs = tuple(Fraction(v) for v in raw)
    if len(fracs) != 3:
        raise ValueError(f"expected a triple, got {len(fracs)} entries")
    if all(f == 0 for f in fracs):
        raise ZeroTripleError("the zero triple does not define a line or point")
    scale = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * scale) for f in fracs]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return (ints[0], ints[1], ints[2])


@dataclass(frozen=True)
class ProjLine:
    """Projective line a*x + b*y + c*z = 0, canonically normalized."""

    coeffs: Triple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coeffs", canonical_triple(self.coeffs))

    def __str__(self):
        a, b, c = self.coeffs
        name = self.label or "line"
        return f"{name}: ({a}, {b}, {c})"


@dataclass(frozen=True)
class ProjPoint:
    """Projective point [x : y : z], canonically normalized."""

    coords: Triple

    def __post_init__(self):
        object.__setattr__(self, "coords", canonical_triple(self.coords))

    def __str__(self):
        return "[" + ":".join(str(v) for v in self.coords) + "]"

    def sort_key(self) -> Triple:
        return self.coords

    def affine(self) -> tuple[Fraction, Fraction] | None:
        """Affine coordinates (x/z, y/z), or None for a point at infinity."""
        x, y, z = self.coords
        if z == 0:
            return None
        return (Fraction(x, z), Fraction(y, z))


@dataclass(frozen=True)
class AffLine:
    """Affine line a*x + b*y + c = 0 with (a, b) != (0, 0), normalized like ProjLine."""

    coeffs: Triple
    label: str = ""

    def __post_init__(self):
        triple = canonical_triple(self.coeffs)
        if triple[0] == 0 and triple[1] == 0:
            raise ValueError(f"affine line {self.label!r} needs (a, b) != (0, 0)")
        object.__setattr__(self, "coeffs", triple)

    def __str__(self):
        a, b, c = self.coeffs
        name = self.label or "line"
        return f"{name}: ({a}, {b}, {c})"


def normalize_line(raw, label: str = "") -> ProjLine:
    """Canonical ProjLine for any nonzero rational coefficient triple."""
    return ProjLine(raw, label)


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique intersection point of two distinct projective lines."""
    if l1.coeffs == l2.coeffs:
        raise EqualLinesError(f"{l1} and {l2} are the same line")
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    return ProjPoint((b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2))


def point_on_line(p: ProjPoint, l: ProjLine) -> bool:
    a, b, c = l.coeffs
    x, y, z = p.coords
    return a * x + b * y + c * z == 0


def projectivize(l: AffLine) -> ProjLine:
    """Homogenize a*x + b*y + c = 0 to a*x + b*y + c*z = 0."""
    return ProjLine(l.coeffs, l.label)


def _invert3(m: list[list[Fraction]]) -> list[list[Fraction]]:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise ValueError("singular chart matrix")
    adj = [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]
    return [[v / det for v in row] for row in adj]


def chart_line_map(infinity: ProjLine) -> list[list[Fraction]]:
    """3x3 matrix sending line coefficient vectors into the chart where
    `infinity` becomes z = 0.

    The chart is fixed deterministically: with k the largest index where
    `infinity` has a nonzero coefficient, the coefficient basis is extended
    by the two standard basis vectors at the remaining indices, in index
    order.  For infinity = z this is the identity.
    """
    u = infinity.coeffs
    k = max(idx for idx in range(3) if u[idx] != 0)
    i, j = [idx for idx in range(3) if idx != k]
    cols = [[Fraction(0)] * 3 for _ in range(3)]
    cols[0][i] = Fraction(1)
    cols[1][j] = Fraction(1)
    cols[2] = [Fraction(v) for v in u]
    p = [[cols[col][row] for col in range(3)] for row in range(3)]
    return _invert3(p)


def restrict_to_affine(l: ProjLine, infinity: ProjLine) -> AffLine:
    """Affine trace of `l` in the chart where `infinity` is the line at infinity."""
    if l.coeffs == infinity.coeffs:
        raise LineAtInfinityError(f"{l} is the chosen line at infinity")
    if infinity.coeffs == (0, 0, 1):
        return AffLine(l.coeffs, l.label)
    m = chart_line_map(infinity)
    vec = [sum(m[row][col] * l.coeffs[col] for col in range(3)) for row in range(3)]
    return AffLine((vec[0], vec[1], vec[2]), l.label)
