"""Compare the two candidate references for adding Theta classes with a finite limit.

For every (r, q) on a small grid and f = g = n, the sum h = r*n + q*n must land
in the returned class.  Only the f + (q/r)*g reference passes for r != q.
"""

from fractions import Fraction
from itertools import product

from rcomplexity.expression_io import format_class, parse_function
from rcomplexity.growth_algebra import limit_ratio, scale
from rcomplexity.rclass import RClass, RClassKind, add_classes, member

RATES = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(7, 3))


def main() -> None:
    n = parse_function("n")
    print(f"{'r':>5} {'q':>5}  {'f+(q/r)g':<24} {'lim':>14}      {'f+(r/q)g':<24} {'lim':>14}")
    for r, q in product(RATES, repeat=2):
        h = scale(n, r) + scale(n, q)
        kept = add_classes(RClass(RClassKind.BIG_THETA, n, r), RClass(RClassKind.BIG_THETA, n, q))
        swapped = RClass(RClassKind.BIG_THETA, n + scale(n, r / q), r)
        marks = ["ok" if member(h, c).member else "FAIL" for c in (kept, swapped)]
        print(
            f"{str(r):>5} {str(q):>5}  {format_class(kept):<24} {str(limit_ratio(h, kept.reference)):>14} {marks[0]:<4}"
            f" {format_class(swapped):<24} {str(limit_ratio(h, swapped.reference)):>14} {marks[1]}"
        )


if __name__ == "__main__":
    main()
