"""Exact integer and rational arithmetic.

Python integers are already sign/magnitude bignums and ``fractions.Fraction``
already keeps a reduced numerator over a positive denominator, so the only
thing this module adds is the pair of binomial conventions the cohomology
formulas rely on:

* ``binom_trunc`` is the counting binomial: it vanishes as soon as the top
  argument drops below the bottom one (in particular for every negative top).
  It measures dimensions and is never negative.
* ``binom_poly`` is the degree-k polynomial m(m-1)...(m-k+1)/k! evaluated at
  an arbitrary integer.  It computes Euler characteristics and may be
  negative.

The two agree on m >= 0 and nowhere else; conflating them silently corrupts
every downstream number, hence two names and no switching flag.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

# Interval endpoints and thresholds are carried as Fraction even when they
# happen to be integers, so parity cases need no special-casing.
Rational = Fraction


def binom_trunc(m: int, k: int) -> int:
    """Binomial coefficient C(m, k), truncated to 0 whenever m < k."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if m < k:
        return 0
    return comb(m, k)


def binom_poly(m: int, k: int) -> int:
    """The polynomial m(m-1)...(m-k+1)/k! at an arbitrary integer m."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    num = 1
    for j in range(k):
        num *= m - j
    # A product of k consecutive integers is divisible by k!, so this is exact.
    return num // factorial(k)
