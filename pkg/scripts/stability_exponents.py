#!/usr/bin/env python3
"""Numeric behaviour of the witness-order upper bound.

For a range of ambient dimensions, prints the optimized bound, its exponent
per dimension, and the minimizing p; the exponent ratio drifts down toward
H(2/3) = 0.91830.  Also prints the derived stability constants.
"""

import math
from fractions import Fraction

from stabset.polymethod import binary_entropy, stability_upper_bound, stability_constants


def main() -> None:
    h23 = binary_entropy(Fraction(2, 3))
    print(f"H(2/3) = {h23:.6f}")
    print(f"{'n':>4} {'p*':>9} {'log2(bound)/n':>14} {'gap to H(2/3)':>14}")
    for n in (10, 20, 30, 60, 120, 240, 480):
        bound, p_star = stability_upper_bound(n)
        ratio = math.log2(bound) / n
        print(f"{n:>4} {str(p_star):>9} {ratio:>14.5f} {ratio - h23:>14.5f}")
    c0, c = stability_constants()
    print(f"density constant c0 = {c0:.6f}")
    print(f"stability exponent c = {c:.7f}")


if __name__ == "__main__":
    main()
