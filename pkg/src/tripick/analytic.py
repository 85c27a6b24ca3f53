"""Closed-form statistics of the inscribed-triangle area ratio.

For side parameters (r, s, t) uniform on the unit cube, the area ratio of
the inscribed triangle is the scalar statistic

    Q = r*s*t + (1 - r)(1 - s)(1 - t),

and everything in this module is a function of it: exact rational moments,
the piecewise CDF/PDF of Q, the quadric regime of the level surfaces
{Q = c}, an arctangent identity used to put the upper CDF branch in its
short form, and the quantile function.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

import numpy as np

__all__ = [
    "CDF_AT_QUARTER",
    "PDF_AT_QUARTER",
    "Regime",
    "area_quotient",
    "sequence_a279055",
    "moment",
    "cdf",
    "pdf",
    "regime",
    "machin_gap",
    "inverse_cdf",
]

#: CDF value at the branch point c = 1/4, exactly (1 + ln 4) / 4.
CDF_AT_QUARTER = 0.25 * (1.0 + math.log(4.0))

#: PDF value at the branch point c = 1/4, exactly 3 ln 4.
PDF_AT_QUARTER = 3.0 * math.log(4.0)

# Width of the |4c - 1| window where both branches are evaluated by their
# series around c = 1/4; the sqrt(|4c - 1|) factors make direct branch
# evaluation lose digits right at the seam.
_QUARTER_WINDOW = 1e-6


def _quotient(r, s, t):
    # Hot path shared with the simulation module: no domain checks.
    return r * s * t + (1.0 - r) * (1.0 - s) * (1.0 - t)


def area_quotient(r, s=None, t=None):
    """Area ratio Q = r*s*t + (1-r)(1-s)(1-t) of the inscribed triangle.

    Accepts either a single (r, s, t) triple (e.g. a
    :class:`~tripick.geometry.SampleTriple`) or three separate scalars or
    arrays, broadcast together.  All components must lie in [0, 1].
    """
    if s is None and t is None:
        r, s, t = r
    elif s is None or t is None:
        raise TypeError("pass a single triple or all three of r, s, t")
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    scalar = r.ndim == 0 and s.ndim == 0 and t.ndim == 0
    for name, v in (("r", r), ("s", s), ("t", t)):
        if not np.all(np.isfinite(v)) or np.any(v < 0.0) or np.any(v > 1.0):
            raise ValueError(f"{name} must lie in [0, 1]")
    q = _quotient(r, s, t)
    return float(q) if scalar else q


def sequence_a279055(n: int) -> int:
    """a(n) = sum_{k=0}^{n} ((n-k)! k!)^2, the OEIS A279055 integers.

    Exact big-integer arithmetic; a(n) is the unreduced numerator of the
    n-th moment of Q and overflows 64 bits already at n = 11.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    fac = [1] * (n + 1)
    for k in range(1, n + 1):
        fac[k] = fac[k - 1] * k
    return sum((fac[n - k] * fac[k]) ** 2 for k in range(n + 1))


def moment(n: int) -> Fraction:
    """E[Q^n] as an exact rational: a(n) / ((n+1) * ((n+1)!)^2), reduced."""
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    return Fraction(sequence_a279055(n), (n + 1) * math.factorial(n + 1) ** 2)


class Regime(enum.Enum):
    """Quadric type of the level surface {Q = c} inside the unit cube."""

    ONE_SHEET = "one-sheet"  # hyperboloid of one sheet, c in [0, 1/4)
    DOUBLE_CONE = "double-cone"  # c = 1/4 exactly
    TWO_SHEETS = "two-sheets"  # hyperboloid of two sheets, c in (1/4, 1]


def regime(c: float) -> Regime:
    """Classify the level surface {Q = c} for c in [0, 1]."""
    c = float(c)
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"c must lie in [0, 1], got {c}")
    if c < 0.25:
        return Regime.ONE_SHEET
    if c == 0.25:
        return Regime.DOUBLE_CONE
    return Regime.TWO_SHEETS


def _validated_flat(c, lo, hi, *, lo_open=False, hi_open=False):
    arr = np.asarray(c, dtype=float)
    flat = np.atleast_1d(arr).ravel()
    bad = ~np.isfinite(flat) | (flat < lo) | (flat > hi)
    if lo_open:
        bad |= flat == lo
    if hi_open:
        bad |= flat == hi
    if bad.any():
        lo_b, hi_b = ("(" if lo_open else "["), (")" if hi_open else "]")
        raise ValueError(f"c must lie in {lo_b}{lo}, {hi}{hi_b}")
    return arr, flat


def _cdf_lower(x):
    # c - (3c - 1/2) ln c + (1-4c)^{3/2} artanh(sqrt(1-4c)), rearranged.
    # Writing artanh(u) = ln((1+u)/2) - (1/2) ln c with 1-u = 4c/(1+u)
    # cancels the two diverging logarithms analytically; the naive form
    # loses every digit below c ~ 1e-8.
    u = np.sqrt(1.0 - 4.0 * x)
    w = 4.0 * x / (1.0 + u)  # equals 1 - u, computed without cancellation
    log_half = np.log1p(-0.5 * w)  # ln((1+u)/2)
    return (
        x
        - 4.0 * x * x * np.log(x) * (2.0 * u + 1.0) / np.square(1.0 + u)
        + u * u * u * log_half
    )


def _cdf_upper(x):
    # c - (3c - 1/2) ln c + (4c-1)^{3/2} (arctan(sqrt(4c-1)) - pi/3)
    d = 4.0 * x - 1.0
    g = np.sqrt(d)
    return x - (3.0 * x - 0.5) * np.log(x) + d * g * (np.arctan(g) - np.pi / 3.0)


def _cdf_near_quarter(x, d):
    # Both branches share the smooth part c - (3c - 1/2) ln c; the branch
    # corrections are O(|4c-1|^{3/2}) series, three terms each (truncation
    # ~1e-24 inside the window).
    out = x - (3.0 * x - 0.5) * np.log(x)
    low = d < 0.0
    if low.any():
        e = -d[low]
        out[low] += e * e * (1.0 + e / 3.0 + e * e / 5.0)
    upp = d > 0.0
    if upp.any():
        dd = d[upp]
        g = np.sqrt(dd)
        out[upp] += -(np.pi / 3.0) * dd * g + dd * dd * (1.0 - dd / 3.0)
    out[d == 0.0] = CDF_AT_QUARTER
    return out


def cdf(c):
    """P(Q <= c): the piecewise closed-form distribution function on [0, 1].

    Lower branch (c < 1/4)
        c - (3c - 1/2) ln c + (1-4c)^{3/2} artanh(sqrt(1-4c))
    Branch point (c = 1/4)
        (1 + ln 4) / 4
    Upper branch (c > 1/4)
        c - (3c - 1/2) ln c + (4c-1)^{3/2} (arctan(sqrt(4c-1)) - pi/3)

    The lower branch is evaluated in a rearranged form that cancels the
    artanh's ln(1/c) divergence analytically, and a small window around
    c = 1/4 switches to the branch series.  Scalar in, float out; array in,
    array out (any shape).
    """
    arr, flat = _validated_flat(c, 0.0, 1.0)
    out = np.empty_like(flat)
    d = 4.0 * flat - 1.0
    near = np.abs(d) < _QUARTER_WINDOW
    zero = flat == 0.0
    one = flat == 1.0
    lo = (d < 0.0) & ~near & ~zero
    hi = (d > 0.0) & ~near & ~one
    out[zero] = 0.0
    out[one] = 1.0
    if lo.any():
        out[lo] = _cdf_lower(flat[lo])
    if hi.any():
        out[hi] = _cdf_upper(flat[hi])
    if near.any():
        out[near] = _cdf_near_quarter(flat[near], d[near])
    np.clip(out, 0.0, 1.0, out=out)
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def _pdf_lower(x):
    # -3 ln c - 6 sqrt(1-4c) artanh(sqrt(1-4c)), with the same artanh
    # rewrite as the CDF: the logarithmic divergences cancel and the
    # density vanishes like 6 c ln(1/c) as c -> 0+.
    u = np.sqrt(1.0 - 4.0 * x)
    w = 4.0 * x / (1.0 + u)
    return -3.0 * w * np.log(x) - 6.0 * u * np.log1p(-0.5 * w)


def _pdf_upper(x):
    # -3 ln c + 2 sqrt(4c-1) (3 arctan(sqrt(4c-1)) - pi)
    g = np.sqrt(4.0 * x - 1.0)
    return -3.0 * np.log(x) + 2.0 * g * (3.0 * np.arctan(g) - np.pi)


def _pdf_near_quarter(x, d):
    out = -3.0 * np.log(x)
    low = d < 0.0
    if low.any():
        e = -d[low]
        out[low] -= e * (6.0 + e * (2.0 + 1.2 * e))
    upp = d > 0.0
    if upp.any():
        dd = d[upp]
        out[upp] += -2.0 * np.pi * np.sqrt(dd) + dd * (6.0 - dd * (2.0 - 1.2 * dd))
    out[d == 0.0] = PDF_AT_QUARTER
    return out


def pdf(c):
    """Density of Q on (0, 1]: the derivative of :func:`cdf`.

    Lower branch (c < 1/4)
        -3 ln c - 6 sqrt(1-4c) artanh(sqrt(1-4c))
    Branch point (c = 1/4)
        3 ln 4
    Upper branch (c > 1/4)
        -3 ln c + 2 sqrt(4c-1) (3 arctan(sqrt(4c-1)) - pi)

    The two logarithms in the lower branch cancel each other: the density
    is finite everywhere and actually vanishes (like 6 c ln(1/c)) as
    c -> 0+.  The closed form is undefined at c = 0 itself, so the domain
    is (0, 1].  Scalar in, float out; array in, array out.
    """
    arr, flat = _validated_flat(c, 0.0, 1.0, lo_open=True)
    out = np.empty_like(flat)
    d = 4.0 * flat - 1.0
    near = np.abs(d) < _QUARTER_WINDOW
    one = flat == 1.0
    lo = (d < 0.0) & ~near
    hi = (d > 0.0) & ~near & ~one
    out[one] = 0.0
    if lo.any():
        out[lo] = _pdf_lower(flat[lo])
    if hi.any():
        out[hi] = _pdf_upper(flat[hi])
    if near.any():
        out[near] = _pdf_near_quarter(flat[near], d[near])
    np.maximum(out, 0.0, out=out)
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def machin_gap(c):
    """Residual of the arctangent identity behind the short upper CDF branch.

    For c in (1/4, 1] the identity

        arctan(1/sqrt(4c-1)) - arctan((2c-1)/sqrt(4c-1))
            = pi - 3 arctan(sqrt(4c-1))

    holds exactly; the returned LHS - RHS should be zero to machine
    precision.  Scalar or array input, c > 1/4 strictly.
    """
    arr, flat = _validated_flat(c, 0.25, 1.0, lo_open=True)
    g = np.sqrt(4.0 * flat - 1.0)
    lhs = np.arctan(1.0 / g) - np.arctan((2.0 * flat - 1.0) / g)
    rhs = np.pi - 3.0 * np.arctan(g)
    out = lhs - rhs
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def inverse_cdf(p: float) -> float:
    """Quantile function: the c in [0, 1] with cdf(c) = p.

    Plain bisection on the monotone CDF, down to a bracket of width 1e-13;
    since the density is bounded by 3 ln 4, the result satisfies
    |cdf(c) - p| <= 1e-12.  Bisection is deliberate: the derivative-free
    bracketing cannot be thrown off by the flat density near c = 0 and
    c = 1.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0
    lo, hi = 0.0, 1.0
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        if cdf(mid) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
