"""Projective 2x2 matrices acting by homographies.

Entries can live in any commutative ring whose elements support ``+``, ``-``
and ``*`` (Python ints, :class:`fractions.Fraction`, or
:class:`farey_neighbours.quadratic.QuadNumber`).  Points of the projective
line are homogeneous pairs ``(x, y)`` standing for ``x / y``; ``(1, 0)`` is
infinity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class MoebiusMatrix:
    a: Any
    b: Any
    c: Any
    d: Any

    @classmethod
    def identity(cls, one=1) -> "MoebiusMatrix":
        return cls(one, one * 0, one * 0, one)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self):
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "MoebiusMatrix") -> "MoebiusMatrix":
        return MoebiusMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def adjugate(self) -> "MoebiusMatrix":
        """Inverse up to the scalar ``det``; equal to the inverse in PGL2."""
        return MoebiusMatrix(self.d, -self.b, -self.c, self.a)

    def scale(self, lam) -> "MoebiusMatrix":
        return MoebiusMatrix(self.a * lam, self.b * lam, self.c * lam, self.d * lam)

    def act(self, x, y):
        """Image of the homogeneous point ``(x : y)``."""
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def trace(self):
        return self.a + self.d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def projectively_equal(self, other: "MoebiusMatrix") -> bool:
        """True when the two matrices are proportional (same element of PGL2)."""
        mine, theirs = self.entries(), other.entries()
        for i in range(4):
            for j in range(4):
                if mine[i] * theirs[j] != mine[j] * theirs[i]:
                    return False
        return any(e != 0 for e in mine)

    def is_scalar(self) -> bool:
        zero = self.a * 0
        return self.b == zero and self.c == zero and self.a == self.d


def same_point(p, q) -> bool:
    """Equality of homogeneous points by cross multiplication."""
    return p[0] * q[1] == p[1] * q[0]
