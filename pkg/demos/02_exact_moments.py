"""
Demo: exact rational moments of the area ratio.

E[Q^n] = a(n) / ((n+1) * ((n+1)!)^2) with a(n) = sum_k ((n-k)! k!)^2, all in
exact integer arithmetic.  Prints the first moments, the spread sigma, and
how fast the moments decay.
"""

from __future__ import annotations

import math

from tripick import SIGMA_Q, moment, sequence_a279055


def main() -> None:
    print("n   a(n)            denominator          E[Q^n]          decimal")
    for n in range(1, 10):
        value = moment(n)
        denominator = (n + 1) * math.factorial(n + 1) ** 2
        print(
            f"{n:<3} {sequence_a279055(n):<15} {denominator:<20} "
            f"{str(value):<15} {float(value):.9f}"
        )

    print("\nmean is exactly 1/4; variance is 1/12 - 1/16 = 1/48")
    print(f"sigma = 1/(4*sqrt(3)) = {SIGMA_Q:.12f}")

    print("\nhigh orders stay exact (a(n) overflows 64-bit at n=11):")
    for n in (11, 25, 50):
        a = sequence_a279055(n)
        print(f"  a({n}) has {len(str(a))} digits; E[Q^{n}] ~ {float(moment(n)):.3e}")


if __name__ == "__main__":
    main()
