"""Area distribution of a random triangle inscribed in a fixed triangle.

Pick one point uniformly on each side of a triangle; the three points span
an inscribed triangle whose area, relative to the outer one, is the random
quantity studied here.  The package provides the exact rational moments,
the closed-form CDF/PDF of the ratio, seed-reproducible Monte Carlo
estimation, and independent quadrature oracles that cross-validate the
closed forms.
"""

__version__ = "0.1.0"

from .analytic import (
    CDF_AT_QUARTER,
    PDF_AT_QUARTER,
    Regime,
    area_quotient,
    cdf,
    inverse_cdf,
    machin_gap,
    moment,
    pdf,
    regime,
    sequence_a279055,
)
from .geometry import (
    BarycentricCoords,
    Point2,
    SampleTriple,
    Triangle,
    barycentric_of,
    bottema_ratio,
    inscribe,
    point_from_barycentric,
    signed_area,
)
from .montecarlo import (
    CHUNK_SIZE,
    SIGMA_Q,
    ExperimentReport,
    ExperimentRow,
    Histogram,
    SimConfig,
    clt_mean_abs_error,
    empirical_pdf,
    error_scaling_experiment,
    estimate_mean,
    ks_statistic,
    sample_chunks,
    sample_stream,
)
from .oracle import (
    QuadratureMethod,
    QuadratureSpec,
    cdf_quadrature,
    moment_quadrature,
    pdf_fd,
    slice_r,
)

__all__ = [
    "__version__",
    "CDF_AT_QUARTER",
    "PDF_AT_QUARTER",
    "CHUNK_SIZE",
    "SIGMA_Q",
    "BarycentricCoords",
    "ExperimentReport",
    "ExperimentRow",
    "Histogram",
    "Point2",
    "QuadratureMethod",
    "QuadratureSpec",
    "Regime",
    "SampleTriple",
    "SimConfig",
    "Triangle",
    "area_quotient",
    "barycentric_of",
    "bottema_ratio",
    "cdf",
    "cdf_quadrature",
    "clt_mean_abs_error",
    "empirical_pdf",
    "error_scaling_experiment",
    "estimate_mean",
    "inscribe",
    "inverse_cdf",
    "ks_statistic",
    "machin_gap",
    "moment",
    "moment_quadrature",
    "pdf",
    "pdf_fd",
    "point_from_barycentric",
    "regime",
    "sample_chunks",
    "sample_stream",
    "sequence_a279055",
    "signed_area",
    "slice_r",
]
