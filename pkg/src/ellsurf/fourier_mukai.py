"""Fourier-Mukai transform and inverse at the level of Chern characters.

A Chern character is the triple (rank, c1, ch2-coefficient) of an object
on either side of the fibration.  Both transforms below are the exact
linear maps induced on these triples by the relative transform with the
Poincare sheaf kernel; they return the alternating-sum invariant of the
image complex.  ``wit1_transform_ch`` exposes the sheaf-level character
of the degree-1 image for degree-zero inputs, which is the negation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .geometry import (
    DivisorClass,
    RationalLike,
    Side,
    SideMismatchError,
    SurfaceGeometry,
    as_fraction,
    fibre_class,
    intersect,
    section_class,
    varpi,
    varpi_inverse,
)


@dataclass(frozen=True)
class ChernCharacter:
    """(ch0, ch1, ch2-coefficient of the fundamental class), exact."""

    side: Side
    rank: Fraction
    c1: DivisorClass
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rank", as_fraction(self.rank))
        object.__setattr__(self, "ch2", as_fraction(self.ch2))
        if self.c1.side is not self.side:
            raise SideMismatchError(
                "c1 lives on %s but the character is on %s"
                % (self.c1.side.value, self.side.value)
            )

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        if self.side is not other.side:
            raise SideMismatchError("cannot add characters on different sides")
        return ChernCharacter(
            self.side, self.rank + other.rank, self.c1 + other.c1, self.ch2 + other.ch2
        )

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return self + (-other)

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(self.side, -self.rank, -self.c1, -self.ch2)

    def fibre_degree(self) -> Fraction:
        """d = c1 . fibre class (no geometry needed: H.mu = 1, mu^2 = 0)."""
        return self.c1.h

    def section_degree(self, geo: SurfaceGeometry) -> Fraction:
        """c = c1 . section class."""
        return intersect(self.c1, section_class(self.side), geo)


@dataclass(frozen=True)
class Polarization:
    """Ample class a*H + b*mu with a, b > 0."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if self.a <= 0 or self.b <= 0:
            raise ValueError("polarization needs a > 0 and b > 0")


class FibreInvariants(NamedTuple):
    n: Fraction
    d: Fraction
    c: Fraction
    s: Fraction


def fibre_invariants(f: ChernCharacter, geo: SurfaceGeometry) -> FibreInvariants:
    """The four scalars (rank, fibre degree, section degree, ch2) of a character."""
    return FibreInvariants(f.rank, f.fibre_degree(), f.section_degree(geo), f.ch2)


def fm_transform_ch(f: ChernCharacter, geo: SurfaceGeometry) -> ChernCharacter:
    """Transform a character on the surface to the Jacobian side.

    Returns the alternating sum ch(degree-0 image) - ch(degree-1 image).
    """
    if f.side is not Side.X:
        raise SideMismatchError("fm_transform_ch takes characters on X")
    n, d, c, s = fibre_invariants(f, geo)
    e = geo.e
    c1 = (
        -varpi(f.c1)
        + section_class(Side.XHAT).scale(d - n)
        + fibre_class(Side.XHAT).scale(d * e + c - Fraction(e, 2) * d + s)
    )
    return ChernCharacter(Side.XHAT, d, c1, -c - d * e + Fraction(e, 2) * n)


def fm_inverse_ch(g: ChernCharacter, geo: SurfaceGeometry) -> ChernCharacter:
    """Transform a character on the Jacobian side back to the surface."""
    if g.side is not Side.XHAT:
        raise SideMismatchError("fm_inverse_ch takes characters on Xhat")
    nh, dh, ch, sh = fibre_invariants(g, geo)
    e = geo.e
    c1 = (
        varpi_inverse(g.c1)
        - fibre_class(Side.X).scale(nh * e)
        - section_class(Side.X).scale(dh + nh)
        + fibre_class(Side.X).scale(sh + nh * e - ch - Fraction(e, 2) * dh)
    )
    return ChernCharacter(Side.X, dh, c1, -(ch + dh * e + Fraction(e, 2) * nh))


def wit1_transform_ch(f: ChernCharacter, geo: SurfaceGeometry) -> ChernCharacter:
    """Character of the degree-1 image sheaf for a fibrewise degree-0 input.

    Only the numerical gate (fibre degree 0) is checked here; fibrewise
    semistability is a sheaf-level hypothesis the caller must supply.
    """
    if f.side is not Side.X:
        raise SideMismatchError("wit1_transform_ch takes characters on X")
    d = f.fibre_degree()
    if d != 0:
        raise ValueError(
            "degree-zero gate: wit1_transform_ch needs fibre degree 0, got %s" % d
        )
    return -fm_transform_ch(f, geo)
