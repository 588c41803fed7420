"""Polarized-surface numerics: Hilbert polynomial, expected dimension, chi(E(n)).

A surface enters only through three integers: the self-intersection of the
polarization, the canonical twist k with K_X = O_X(k), and chi(O_X).  Smooth
hypersurfaces of degree delta in P^3 are the shipped constructor; a generic
triple is accepted so the natural-cohomology results stay usable on any
surface with K_X a multiple of the polarization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import binom_poly


@dataclass(frozen=True)
class SurfaceNumerics:
    """(H^2, canonical twist, chi(O_X)); delta is set for hypersurfaces."""

    h_square: int
    k: int
    chi0: int
    delta: int | None = None

    def __post_init__(self) -> None:
        if self.h_square < 1:
            raise ValueError(f"polarization self-intersection must be >= 1, got {self.h_square}")
        # Adjunction parity: H^2 * (k + 1) even, exactly what makes the
        # Riemann-Roch value chi0 + H^2 * n(n-k)/2 an integer for every n.
        if (self.h_square * (self.k + 1)) % 2 != 0:
            raise ValueError(
                f"inconsistent surface data: h_square={self.h_square}, k={self.k} "
                "violate adjunction parity"
            )


def hypersurface(delta: int) -> SurfaceNumerics:
    """Numerics of a smooth degree-delta hypersurface in P^3, delta >= 4.

    The canonical twist is delta - 4; chi(O_X) follows from the restriction
    sequence of O on P^3: 1 - chi(O(-delta)) = 1 + C(delta-1, 3).
    """
    if delta < 4:
        raise ValueError(f"hypersurface degree must be >= 4, got {delta}")
    return SurfaceNumerics(
        h_square=delta,
        k=delta - 4,
        chi0=1 + binom_poly(delta - 1, 3),
        delta=delta,
    )


def chi_OX(surface: SurfaceNumerics, n: int) -> int:
    """chi(O_X(n)) by Riemann-Roch: chi0 + H^2 * n(n-k)/2."""
    twice = surface.h_square * n * (n - surface.k)
    assert twice % 2 == 0
    return surface.chi0 + twice // 2


def chi_OX_poly(surface: SurfaceNumerics, t: Fraction | int) -> Fraction:
    """The Riemann-Roch polynomial of chi_OX evaluated at a rational point."""
    t = Fraction(t)
    return surface.chi0 + Fraction(surface.h_square, 2) * t * (t - surface.k)


def expected_dim(surface: SurfaceNumerics, c2: int) -> int:
    """Expected dimension 4*c2 - 3*chi(O_X) of the rank-2, c1 = 0 moduli space."""
    return 4 * c2 - 3 * surface.chi0


def chi_E(surface: SurfaceNumerics, c2: int, n: int) -> int:
    """chi(E(n)) = 2*chi(O_X(n)) - c2 for a rank-2 bundle with c1 = 0."""
    return 2 * chi_OX(surface, n) - c2
