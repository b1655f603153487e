"""Spectral cover classes and Simpson rank/degree of sheaves on them.

A cover is modeled by its numerical class n*Theta + k*muhat on the
Jacobian side: every formula here consumes only the derived invariants
(chi, p = 1 - chi, ell = C.Theta).  Rank and degree of a pure
dimension-one sheaf on the cover are read off its Hilbert polynomial
with respect to the fibre polarization, P(m) = rC*n*m + dC + rC*chi(C).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .geometry import (
    DivisorClass,
    Side,
    SideMismatchError,
    SurfaceGeometry,
    as_fraction,
    chi_divisor_curve,
    fibre_class,
    intersect,
    section_class,
    varpi_inverse,
)
from .fourier_mukai import ChernCharacter, fibre_invariants


@dataclass(frozen=True)
class CoverClass:
    """Numerical spectral cover C = n*Theta + k*muhat, n >= 1."""

    geo: SurfaceGeometry
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cover degree n must be >= 1, got %r" % (self.n,))

    def divisor_class(self) -> DivisorClass:
        return DivisorClass(Side.XHAT, self.n, self.k)

    def chi(self) -> Fraction:
        return chi_divisor_curve(self.divisor_class(), self.geo)

    def p(self) -> Fraction:
        return 1 - self.chi()

    def ell(self) -> Fraction:
        """ell = C . Theta = -n*e + k."""
        return intersect(self.divisor_class(), section_class(Side.XHAT), self.geo)


class CoverInvariants(NamedTuple):
    chi: Fraction
    p: Fraction
    ell: Fraction


def cover_invariants(cover: CoverClass) -> CoverInvariants:
    return CoverInvariants(cover.chi(), cover.p(), cover.ell())


@dataclass(frozen=True)
class CoverSheafInvariants:
    """Rank and degree of a pure dimension-one sheaf on a spectral cover."""

    cover: CoverClass
    rank_on_cover: Fraction
    degree_on_cover: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rank_on_cover", as_fraction(self.rank_on_cover))
        object.__setattr__(self, "degree_on_cover", as_fraction(self.degree_on_cover))
        if self.rank_on_cover <= 0:
            raise ValueError(
                "pure dimension-one sheaves here have rank_on_cover > 0, got %s"
                % self.rank_on_cover
            )

    def slope(self) -> Fraction:
        return self.degree_on_cover / self.rank_on_cover


@dataclass(frozen=True)
class HilbertPolynomial:
    """P(m) = leading*m + constant, with leading > 0 for nonzero sheaves."""

    leading: Fraction
    constant: Fraction

    def __post_init__(self):
        object.__setattr__(self, "leading", as_fraction(self.leading))
        object.__setattr__(self, "constant", as_fraction(self.constant))

    def __call__(self, m: int) -> Fraction:
        return self.leading * m + self.constant


def simpson_from_hilbert(
    poly: HilbertPolynomial, cover: CoverClass
) -> CoverSheafInvariants:
    """Extract (rank, degree) on the cover from a Hilbert polynomial."""
    if poly.leading <= 0:
        raise ValueError(
            "Hilbert polynomial of a nonzero pure dimension-one sheaf needs a "
            "positive leading coefficient, got %s" % poly.leading
        )
    r_c = poly.leading / cover.n
    d_c = poly.constant - r_c * cover.chi()
    return CoverSheafInvariants(cover, r_c, d_c)


def hilbert_from_simpson(inv: CoverSheafInvariants) -> HilbertPolynomial:
    """Exact inverse of simpson_from_hilbert."""
    return HilbertPolynomial(
        inv.rank_on_cover * inv.cover.n,
        inv.degree_on_cover + inv.rank_on_cover * inv.cover.chi(),
    )


def degree_on_cover(g: ChernCharacter, cover: CoverClass) -> CoverSheafInvariants:
    """Rank and degree on the cover of the transform of a surface character.

    The input must have fibre degree zero; its transform is then supported
    on a cover of class C, with rank n'/n and degree
    c' - n'*e + n'*(1-g) - (n'/n)*chi(C).
    """
    if g.side is not Side.X:
        raise SideMismatchError("degree_on_cover takes characters on X")
    geo = cover.geo
    n_prime, d, c_prime, _ = fibre_invariants(g, geo)
    if d != 0:
        raise ValueError(
            "degree_on_cover needs fibre degree 0 (transform supported on the "
            "cover), got %s" % d
        )
    r_c = n_prime / cover.n
    d_c = (
        c_prime
        - n_prime * geo.e
        + n_prime * (1 - geo.genus)
        - r_c * cover.chi()
    )
    return CoverSheafInvariants(cover, r_c, d_c)


def cover_sheaf_to_surface_ch(cover: CoverClass, r) -> ChernCharacter:
    """Surface character of the inverse transform of a rank-one degree-r
    sheaf on the cover: (n, varpi^{-1}(C) - n*H + (r-p+1+n(g-1)-ell)*mu,
    -(n*e + ell)).  The result always has fibre degree zero.
    """
    r = as_fraction(r)
    geo = cover.geo
    n = cover.n
    p, ell = cover.p(), cover.ell()
    c1 = (
        varpi_inverse(cover.divisor_class())
        - section_class(Side.X).scale(n)
        + fibre_class(Side.X).scale(r - p + 1 + n * (geo.genus - 1) - ell)
    )
    return ChernCharacter(Side.X, n, c1, -(n * geo.e + ell))


def cover_sheaf_ch_on_cover_side(cover: CoverClass, r) -> ChernCharacter:
    """Character on the Jacobian side of the same sheaf: (0, C, r - C^2/2)."""
    r = as_fraction(r)
    c = cover.divisor_class()
    c_sq = intersect(c, c, cover.geo)
    return ChernCharacter(Side.XHAT, 0, c, r - c_sq / 2)
