"""
Demo: inscribed triangles and the area-ratio determinant.

Builds a fixed triangle, inscribes triangles at chosen and random side
parameters, and shows that the area ratio |RST|/|ABC| equals both the
barycentric-row determinant and the closed-form quotient
Q = r*s*t + (1-r)(1-s)(1-t) -- independent of the outer triangle's shape.
"""

from __future__ import annotations

import numpy as np

from tripick import (
    BarycentricCoords,
    Point2,
    SampleTriple,
    Triangle,
    area_quotient,
    barycentric_of,
    bottema_ratio,
    inscribe,
    point_from_barycentric,
    signed_area,
)


def main() -> None:
    outer = Triangle(Point2(2, 2), Point2(6, 8), Point2(13, 1))
    print(f"outer triangle area: {signed_area(outer):+.3f}")

    print("\nside parameters -> area ratio")
    for r, s, t in [(0.5, 0.5, 0.5), (0.0, 0.0, 0.0), (0.9, 0.1, 0.5), (0.0, 1.0, 0.3)]:
        sample = SampleTriple(r, s, t)
        inner = inscribe(outer, sample)
        ratio = abs(signed_area(inner)) / abs(signed_area(outer))
        print(
            f"  (r,s,t)=({r:.1f},{s:.1f},{t:.1f})  "
            f"|RST|/|ABC| = {ratio:.6f}   Q = {area_quotient(sample):.6f}"
        )
    print("  (the medial triangle at (0.5,0.5,0.5) covers exactly 1/4)")

    # determinant route: barycentric rows of the inscribed vertices
    sample = SampleTriple(0.3, 0.7, 0.2)
    inner = inscribe(outer, sample)
    rows = [barycentric_of(p, outer) for p in (inner.a, inner.b, inner.c)]
    det = bottema_ratio(*rows)
    print("\ndeterminant of the barycentric rows vs direct area ratio:")
    print(f"  det = {det:.15f}")
    print(f"  area ratio = {signed_area(inner) / signed_area(outer):.15f}")

    # affine invariance: the ratio ignores the outer triangle entirely
    rng = np.random.default_rng(1)
    other = Triangle(Point2(-40, 3), Point2(12, -7), Point2(0.5, 55))
    worst = 0.0
    for _ in range(2000):
        smp = SampleTriple(*rng.random(3))
        r1 = abs(signed_area(inscribe(outer, smp))) / abs(signed_area(outer))
        r2 = abs(signed_area(inscribe(other, smp))) / abs(signed_area(other))
        worst = max(worst, abs(r1 - r2))
    print(f"\naffine invariance over 2000 samples: max discrepancy {worst:.2e}")

    # weights recovered from points round-trip through the triangle
    weights = BarycentricCoords(0.2, 0.5, 0.3)
    recovered = barycentric_of(point_from_barycentric(weights, outer), outer)
    print("\nround trip of (0.2, 0.5, 0.3):", tuple(recovered))


if __name__ == "__main__":
    main()
