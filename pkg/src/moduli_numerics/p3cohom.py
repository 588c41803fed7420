"""Cohomology of twisted line bundles and their finite direct sums on P^3.

Everything here is the four-line table for O(n) on projective 3-space:
h^0 and h^3 are binomial counts, h^1 and h^2 vanish identically, and direct
sums are handled by linearity.  Euler characteristics are computed from the
polynomial binomial directly, never by summing truncated h's; the test suite
cross-asserts that both routes agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .arith import binom_poly, binom_trunc


@dataclass(frozen=True)
class FreeSheafSum:
    """A finite direct sum of line bundles, stored as (twist, multiplicity) terms.

    The empty sum is the zero sheaf.  Multiplicities are >= 1; repeated twists
    are allowed and simply add up.
    """

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for twist, mult in self.terms:
            if mult < 1:
                raise ValueError(f"multiplicity must be >= 1, got {mult} for twist {twist}")

    @classmethod
    def of(cls, terms: Iterable[tuple[int, int]]) -> "FreeSheafSum":
        return cls(tuple((int(t), int(m)) for t, m in terms))

    @property
    def rank(self) -> int:
        return sum(mult for _, mult in self.terms)


def h_line(i: int, n: int) -> int:
    """h^i(P^3, O(n)): counting h^0, vanishing middle, Serre-dual h^3."""
    if i == 0:
        return binom_trunc(n + 3, 3)
    if i in (1, 2):
        return 0
    if i == 3:
        return binom_trunc(-n - 1, 3)
    raise ValueError(f"cohomology index must be in 0..3, got {i}")


def chi_line(n: int) -> int:
    """chi(P^3, O(n)) = (n+1)(n+2)(n+3)/6, valid at every integer n."""
    return binom_poly(n + 3, 3)


def h_free_sum(i: int, sheaf: FreeSheafSum, n: int) -> int:
    """h^i of a direct sum of line bundles, twisted by n."""
    return sum(mult * h_line(i, twist + n) for twist, mult in sheaf.terms)


def chi_free_sum(sheaf: FreeSheafSum, n: int) -> int:
    """Euler characteristic of a direct sum of line bundles, twisted by n."""
    return sum(mult * chi_line(twist + n) for twist, mult in sheaf.terms)
