"""Planar triangle primitives and the uniform inscribed-triangle construction.

A triangle RST is inscribed in ABC by picking R on side BC, S on CA and T on
AB at fractional positions r, s, t.  Describing R, S, T in barycentric
coordinates turns the area ratio |RST| / |ABC| into a 3x3 determinant of the
coordinate rows, which is what makes the distribution of the ratio tractable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Point2",
    "Triangle",
    "BarycentricCoords",
    "SampleTriple",
    "signed_area",
    "point_from_barycentric",
    "barycentric_of",
    "bottema_ratio",
    "inscribe",
]


@dataclass(frozen=True)
class Point2:
    """A point in the plane.  Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


def _shoelace(p: Point2, q: Point2, r: Point2) -> float:
    # Cross-product form of the shoelace formula; positive when p -> q -> r
    # turns counter-clockwise.
    return 0.5 * ((q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y))


@dataclass(frozen=True)
class Triangle:
    """Non-degenerate triangle given by three vertices, any orientation."""

    a: Point2
    b: Point2
    c: Point2

    def __post_init__(self):
        if self.a == self.b or self.b == self.c or self.c == self.a:
            raise ValueError("triangle vertices must be pairwise distinct")
        if _shoelace(self.a, self.b, self.c) == 0.0:
            raise ValueError("triangle is degenerate (zero signed area)")

    def diameter(self) -> float:
        """Longest side length; the natural scale for geometric tolerances."""
        return max(
            math.hypot(self.b.x - self.a.x, self.b.y - self.a.y),
            math.hypot(self.c.x - self.b.x, self.c.y - self.b.y),
            math.hypot(self.a.x - self.c.x, self.a.y - self.c.y),
        )


def _triangle_unchecked(a: Point2, b: Point2, c: Point2) -> Triangle:
    # Bypasses the non-degeneracy check: inscribed triangles may legally
    # collapse, since zero-ratio samples lie on the support boundary.
    tri = object.__new__(Triangle)
    object.__setattr__(tri, "a", a)
    object.__setattr__(tri, "b", b)
    object.__setattr__(tri, "c", c)
    return tri


@dataclass(frozen=True)
class BarycentricCoords:
    """Weights (alpha, beta, gamma) with alpha + beta + gamma = 1.

    Inputs are rescaled by their sum at construction, so any triple with a
    nonzero sum is accepted.  Components may be negative: those describe
    points outside the reference triangle.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        total = float(self.alpha) + float(self.beta) + float(self.gamma)
        if not math.isfinite(total):
            raise ValueError("barycentric coordinates must be finite")
        if abs(total) < 1e-12:
            raise ValueError("barycentric coordinates must not sum to zero")
        object.__setattr__(self, "alpha", float(self.alpha) / total)
        object.__setattr__(self, "beta", float(self.beta) / total)
        object.__setattr__(self, "gamma", float(self.gamma) / total)

    def __iter__(self):
        yield self.alpha
        yield self.beta
        yield self.gamma


@dataclass(frozen=True)
class SampleTriple:
    """Side parameters (r, s, t), each in the closed unit interval."""

    r: float
    s: float
    t: float

    def __post_init__(self):
        for name in ("r", "s", "t"):
            v = float(getattr(self, name))
            object.__setattr__(self, name, v)
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {v}")

    def __iter__(self):
        yield self.r
        yield self.s
        yield self.t


def signed_area(tri: Triangle) -> float:
    """Signed area of the triangle; positive for counter-clockwise vertices."""
    return _shoelace(tri.a, tri.b, tri.c)


def point_from_barycentric(coords: BarycentricCoords, tri: Triangle) -> Point2:
    """The point alpha*A + beta*B + gamma*C."""
    al, be, ga = coords
    return Point2(
        al * tri.a.x + be * tri.b.x + ga * tri.c.x,
        al * tri.a.y + be * tri.b.y + ga * tri.c.y,
    )


def barycentric_of(p: Point2, tri: Triangle) -> BarycentricCoords:
    """Barycentric coordinates of ``p`` relative to ``tri`` via area ratios.

    Inverse of :func:`point_from_barycentric`.  Points outside the triangle
    get negative components; the weights still sum to one.
    """
    whole = _shoelace(tri.a, tri.b, tri.c)
    return BarycentricCoords(
        _shoelace(p, tri.b, tri.c) / whole,
        _shoelace(tri.a, p, tri.c) / whole,
        _shoelace(tri.a, tri.b, p) / whole,
    )


def bottema_ratio(p1: BarycentricCoords, p2: BarycentricCoords, p3: BarycentricCoords) -> float:
    """Determinant of the stacked barycentric rows of three points.

    Multiplied by the reference triangle's signed area this gives the signed
    area of the triangle spanned by the three mapped points, so the value is
    itself the signed area ratio.
    """
    x1, y1, z1 = p1
    x2, y2, z2 = p2
    x3, y3, z3 = p3
    return (
        x1 * (y2 * z3 - z2 * y3)
        - y1 * (x2 * z3 - z2 * x3)
        + z1 * (x2 * y3 - y2 * x3)
    )


def inscribe(tri: Triangle, sample: SampleTriple) -> Triangle:
    """Inscribed triangle RST for side parameters (r, s, t).

    R = B + r*(C - B) on side BC, S = C + s*(A - C) on CA, and
    T = A + t*(B - A) on AB.  The result may be degenerate (zero area):
    samples with zero area ratio are legal and collapse RST to a segment.
    """
    r, s, t = sample
    rp = Point2(tri.b.x + r * (tri.c.x - tri.b.x), tri.b.y + r * (tri.c.y - tri.b.y))
    sp = Point2(tri.c.x + s * (tri.a.x - tri.c.x), tri.c.y + s * (tri.a.y - tri.c.y))
    tp = Point2(tri.a.x + t * (tri.b.x - tri.a.x), tri.a.y + t * (tri.b.y - tri.a.y))
    return _triangle_unchecked(rp, sp, tp)
