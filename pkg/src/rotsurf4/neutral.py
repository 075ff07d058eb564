"""Vectors and the neutral inner product on 4-space.

The metric has signature (+, +, -, -) with respect to the orthonormal basis
e1, e2, e3, e4, i.e. <v, v> = c1^2 + c2^2 - c3^2 - c4^2.  All vectors are
stored in orthonormal coordinates; expressions in the lightlike pair
(xi1, xi2) are converted on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

_SQRT2 = math.sqrt(2.0)

#: Relative tolerance used to decide causal character of nearly-null vectors.
DEFAULT_NULL_TOL = 1e-12


class CausalCharacter(str, Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    ZERO = "zero"


@dataclass(frozen=True)
class MVec4:
    """A 4-vector in orthonormal coordinates."""

    c1: float
    c2: float
    c3: float
    c4: float

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.c1, self.c2, self.c3, self.c4)

    @classmethod
    def from_components(cls, comps) -> "MVec4":
        a, b, c, d = comps
        return cls(float(a), float(b), float(c), float(d))

    @classmethod
    def from_null_basis(cls, a: float, b: float, c: float, d: float) -> "MVec4":
        """Convert a*e1 + b*e4 + c*xi1 + d*xi2 to orthonormal coordinates."""
        return cls(float(a), (c - d) / _SQRT2, (c + d) / _SQRT2, float(b))

    def __add__(self, other: "MVec4") -> "MVec4":
        return MVec4(self.c1 + other.c1, self.c2 + other.c2,
                     self.c3 + other.c3, self.c4 + other.c4)

    def __sub__(self, other: "MVec4") -> "MVec4":
        return MVec4(self.c1 - other.c1, self.c2 - other.c2,
                     self.c3 - other.c3, self.c4 - other.c4)

    def __neg__(self) -> "MVec4":
        return MVec4(-self.c1, -self.c2, -self.c3, -self.c4)

    def __mul__(self, s: float) -> "MVec4":
        s = float(s)
        return MVec4(self.c1 * s, self.c2 * s, self.c3 * s, self.c4 * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "MVec4":
        return self * (1.0 / float(s))


ZERO = MVec4(0.0, 0.0, 0.0, 0.0)
E1 = MVec4(1.0, 0.0, 0.0, 0.0)
E2 = MVec4(0.0, 1.0, 0.0, 0.0)
E3 = MVec4(0.0, 0.0, 1.0, 0.0)
E4 = MVec4(0.0, 0.0, 0.0, 1.0)

BASIS = (E1, E2, E3, E4)


def inner(a: MVec4, b: MVec4) -> float:
    """Neutral inner product, bilinear and symmetric."""
    return a.c1 * b.c1 + a.c2 * b.c2 - a.c3 * b.c3 - a.c4 * b.c4


def euclid_sq(v: MVec4) -> float:
    """Euclidean square norm; used only for tolerance scaling."""
    return v.c1 * v.c1 + v.c2 * v.c2 + v.c3 * v.c3 + v.c4 * v.c4


def causal_character(v: MVec4, tol: float = DEFAULT_NULL_TOL) -> CausalCharacter:
    """Classify v as spacelike, timelike, lightlike or zero.

    A vector counts as zero when its Euclidean length is below ``tol``; it is
    lightlike when nonzero and |<v,v>| <= tol * ||v||_euclid^2, so the test is
    scale invariant for nonzero vectors.
    """
    s = euclid_sq(v)
    if math.sqrt(s) <= tol:
        return CausalCharacter.ZERO
    q = inner(v, v)
    if abs(q) <= tol * s:
        return CausalCharacter.LIGHTLIKE
    return CausalCharacter.SPACELIKE if q > 0.0 else CausalCharacter.TIMELIKE


@dataclass(frozen=True)
class NullPair:
    """The canonical lightlike pair with <xi1, xi2> = -1."""

    xi1: MVec4
    xi2: MVec4


def null_pair() -> NullPair:
    """Return xi1 = (e2 + e3)/sqrt(2), xi2 = (-e2 + e3)/sqrt(2)."""
    return NullPair(
        xi1=MVec4(0.0, 1.0 / _SQRT2, 1.0 / _SQRT2, 0.0),
        xi2=MVec4(0.0, -1.0 / _SQRT2, 1.0 / _SQRT2, 0.0),
    )


def gram_matrix(vectors) -> list[list[float]]:
    """Pairwise inner products of a sequence of vectors."""
    return [[inner(a, b) for b in vectors] for a in vectors]
