"""Brute-force numerical recomputation of the area-ratio distribution.

The CDF of Q is, by definition, the volume of {(r,s,t) in [0,1]^3 :
Q(r,s,t) <= c}.  This module recomputes that volume without using the
closed forms it is meant to validate: a nested adaptive quadrature of the
complement region in the two-sheet regime (c > 1/4), and a midpoint
indicator-lattice count in the one-sheet regime.  A centered finite
difference of the CDF and 1-D quadrature moments complete the
cross-checking toolkit.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import analytic

__all__ = [
    "QuadratureMethod",
    "QuadratureSpec",
    "slice_r",
    "cdf_quadrature",
    "pdf_fd",
    "moment_quadrature",
]


class QuadratureMethod(enum.Enum):
    NESTED_ADAPTIVE = "nested-adaptive"
    BOOLE_GRID = "boole-grid"


@dataclass(frozen=True)
class QuadratureSpec:
    """Numerical-integration settings.

    ``resolution`` is the number of lattice points per axis for
    BOOLE_GRID and the subdivision limit for NESTED_ADAPTIVE;
    ``abs_tol`` is the target absolute error of the adaptive rule.
    """

    method: QuadratureMethod
    resolution: int = 400
    abs_tol: float = 1e-8

    def __post_init__(self):
        if self.resolution < 16:
            raise ValueError("resolution must be at least 16")
        if not self.abs_tol > 0.0:
            raise ValueError("abs_tol must be positive")


def slice_r(s, t, c):
    """The r-coordinate of the level surface Q = c above the point (s, t):

        r(s, t, c) = (c - 1 - s t + s + t) / (s + t - 1).

    Undefined on the plane s + t = 1, where Q does not depend on r; inputs
    on that plane are rejected.  Scalar or array arguments.
    """
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    c = np.asarray(c, dtype=float)
    scalar = s.ndim == 0 and t.ndim == 0 and c.ndim == 0
    denom = s + t - 1.0
    if np.any(denom == 0.0):
        raise ValueError("s + t = 1: the level surface has a pole on that line")
    out = (c - 1.0 - s * t + s + t) / denom
    return float(out) if scalar else out


def _indicator_volumes(levels, resolution):
    """Midpoint-lattice volume of {Q <= level} for each level at once.

    The x-slices are shared across levels, so checking many levels costs
    little more than checking one.  Error is dominated by cells cut by the
    level surface: O(1/resolution).
    """
    mids = (np.arange(resolution) + 0.5) / resolution
    y = mids[:, None]
    z = mids[None, :]
    yz = y * z
    cyz = (1.0 - y) * (1.0 - z)
    counts = np.zeros(len(levels), dtype=np.int64)
    for x in mids:
        q = x * yz + (1.0 - x) * cyz
        for i, level in enumerate(levels):
            counts[i] += np.count_nonzero(q <= level)
    return counts / float(resolution) ** 3


def cdf_quadrature(c: float, spec: QuadratureSpec) -> float:
    """P(Q <= c) recomputed by volume integration on the unit cube.

    NESTED_ADAPTIVE (two-sheet regime, c > 1/4 only): the complement of
    {Q <= c} consists of two congruent caps, and integrating the r-extent
    of the cap around (1,1,1) gives

        CDF(c) = 1 - 2 * int_c^1 int_{c/t}^1 (1 - r(s,t,c)) ds dt,

    evaluated by nested adaptive Gauss-Kronrod quadrature with the inner
    tolerance ten times tighter than ``spec.abs_tol``.

    BOOLE_GRID (any c): indicator count over a resolution^3 midpoint
    lattice; error O(1/resolution).

    Both routes degrade near the double-cone level c = 1/4 and warn there.
    """
    c = float(c)
    if not 0.0 < c < 1.0:
        raise ValueError(f"c must lie strictly inside (0, 1), got {c}")
    if abs(c - 0.25) < 0.01:
        warnings.warn(
            "quadrature accuracy degrades near the double-cone level c = 1/4",
            stacklevel=2,
        )
    if spec.method is QuadratureMethod.NESTED_ADAPTIVE:
        if c <= 0.25:
            raise ValueError(
                "the complement integral needs the two-sheet regime (c > 1/4); "
                "use BOOLE_GRID below it"
            )

        def cap_depth(t):
            val, _ = integrate.quad(
                lambda s: 1.0 - slice_r(s, t, c),
                c / t,
                1.0,
                epsabs=spec.abs_tol / 10.0,
                limit=spec.resolution,
            )
            return val

        outer, _ = integrate.quad(
            cap_depth, c, 1.0, epsabs=spec.abs_tol, limit=spec.resolution
        )
        return 1.0 - 2.0 * outer
    return float(_indicator_volumes([c], spec.resolution)[0])


def pdf_fd(c: float, h: float = 1e-6) -> float:
    """Centered finite difference (cdf(c+h) - cdf(c-h)) / (2h).

    Second-order accurate away from the branch point; stencils that leave
    (0, 1) or straddle c = 1/4 are rejected rather than silently degraded.
    """
    c = float(c)
    h = float(h)
    if h <= 0.0:
        raise ValueError("step h must be positive")
    if c - h <= 0.0 or c + h >= 1.0:
        raise ValueError("stencil must stay inside (0, 1)")
    if c - h < 0.25 < c + h:
        raise ValueError("stencil must not straddle the branch point c = 1/4")
    return (analytic.cdf(c + h) - analytic.cdf(c - h)) / (2.0 * h)


def moment_quadrature(n: int, spec: QuadratureSpec) -> float:
    """E[Q^n] as the integral of c^n * pdf(c) over (0, 1].

    Adaptive quadrature split at the branch point c = 1/4.  Orders above 20
    are rejected: the integrand mass concentrates at the endpoints and the
    absolute-tolerance contract stops being meaningful.
    """
    n = int(n)
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    if n > 20:
        raise ValueError("orders above 20 are outside the supported range")

    def integrand(x):
        if x <= 0.0:
            return 0.0
        return x**n * analytic.pdf(x)

    left, _ = integrate.quad(
        integrand, 0.0, 0.25, epsabs=spec.abs_tol / 2.0, limit=spec.resolution
    )
    right, _ = integrate.quad(
        integrand, 0.25, 1.0, epsabs=spec.abs_tol / 2.0, limit=spec.resolution
    )
    return left + right
