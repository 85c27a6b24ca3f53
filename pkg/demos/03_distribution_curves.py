"""
Demo: the closed-form CDF and PDF of the area ratio.

Both functions are piecewise across c = 1/4, where the level surface
{Q = c} switches from a one-sheet hyperboloid through a double cone to two
sheets.  The density peaks there at 3 ln 4 with a square-root cusp; the
figure (written to demos/output/) shows the classic shark-fin shape.
"""

from __future__ import annotations

import pathlib

import numpy as np

from tripick import (
    CDF_AT_QUARTER,
    PDF_AT_QUARTER,
    Regime,
    cdf,
    inverse_cdf,
    pdf,
    regime,
)


def main() -> None:
    print("level-surface regimes:")
    for c in (0.1, 0.25, 0.4):
        print(f"  c={c}: {regime(c).value}")
    assert regime(0.25) is Regime.DOUBLE_CONE

    print(f"\nat the branch point c=1/4: CDF={CDF_AT_QUARTER:.12f}, PDF={PDF_AT_QUARTER:.12f}")
    print("half of all inscribed triangles fall below the median ratio "
          f"c={inverse_cdf(0.5):.9f}")
    for p in (0.05, 0.25, 0.75, 0.95):
        print(f"  {int(p*100):>2}% quantile: {inverse_cdf(p):.9f}")

    grid = np.linspace(1e-4, 1.0, 2000)
    f = cdf(grid)
    d = pdf(grid)
    print(f"\nPDF maximum on the grid: {d.max():.6f} at c={grid[d.argmax()]:.4f}")
    print(f"PDF near the endpoints: pdf(1e-4)={pdf(1e-4):.6f}, pdf(1)={pdf(1.0):.1f}")
    print("(the density vanishes at both ends; there is no divergence at 0)")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("\nmatplotlib not available; skipping the figure")
        return

    out = pathlib.Path(__file__).parent / "output"
    out.mkdir(exist_ok=True)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.plot(grid, f, lw=2)
    ax1.axvline(0.25, color="gray", ls=":")
    ax1.set_title("CDF of the area ratio")
    ax1.set_xlabel("c")
    ax2.plot(grid, d, lw=2, color="firebrick")
    ax2.axvline(0.25, color="gray", ls=":")
    ax2.set_title("PDF (shark fin, peak 3 ln 4 at c=1/4)")
    ax2.set_xlabel("c")
    fig.tight_layout()
    target = out / "distribution_curves.png"
    fig.savefig(target, dpi=120)
    print(f"\nwrote {target}")


if __name__ == "__main__":
    main()
