#!/usr/bin/env python3
"""Order-versus-size trend of the dyadic block construction.

Prints one row per parameter l with the exact size, the witnessed order,
both size bounds, and the exponent log k / log |A|, which should drift down
toward 1/(2 - c) with c = 0.1523.
"""

import math

from stabset.constructions import (
    dyadic_exact_size,
    dyadic_exponent_constant,
    size_bound,
)


def main() -> None:
    c = dyadic_exponent_constant()
    target = 1.0 / (2.0 - c)
    print(f"exponent constant c = {c:.6f}, limit ratio 1/(2-c) = {target:.6f}")
    print(f"{'l':>2} {'k':>6} {'|A|':>8} {'binom-bound':>12} {'closed-bound':>13} {'log k / log |A|':>16}")
    for l in range(1, 5):
        k = math.comb(2 * l, l) * 2**l
        size = dyadic_exact_size(l)
        bound = size_bound(l)
        ratio = math.log(k) / math.log(size)
        print(
            f"{l:>2} {k:>6} {size:>8} {float(bound.binomial_form):>12.1f} "
            f"{bound.closed_form:>13.1f} {ratio:>16.4f}"
        )


if __name__ == "__main__":
    main()
