"""Exact intersection theory on an elliptic surface with a section.

Everything lives in the rank-2 lattice spanned by the section class and
the fibre class, either on the surface itself (classes written a*H + b*mu)
or on the relative compactified Jacobian (a*Theta + b*muhat).  The two
lattices are isometric via the coefficient-transport map ``varpi``.

All coefficients are exact rationals; floats are rejected.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str]


class Side(Enum):
    """Which of the two isometric lattices a class lives in."""

    X = "X"
    XHAT = "Xhat"


class SideMismatchError(ValueError):
    """A binary operation mixed classes from the two lattices."""


def as_fraction(x: RationalLike) -> Fraction:
    """Coerce to an exact rational, refusing floats."""
    if isinstance(x, float):
        raise TypeError("exact rational required, got float %r" % x)
    return Fraction(x)


@dataclass(frozen=True)
class SurfaceGeometry:
    """The pair (g, e): genus of the base curve and e = deg E = -H^2."""

    genus: int
    e: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be >= 0, got %r" % (self.genus,))
        if self.e < 0:
            raise ValueError("e must be >= 0, got %r" % (self.e,))


@dataclass(frozen=True)
class DivisorClass:
    """a*H + b*mu on the surface, or a*Theta + b*muhat on the Jacobian."""

    side: Side
    h: Fraction
    f: Fraction

    def __post_init__(self):
        object.__setattr__(self, "h", as_fraction(self.h))
        object.__setattr__(self, "f", as_fraction(self.f))

    def _check_side(self, other: "DivisorClass") -> None:
        if self.side is not other.side:
            raise SideMismatchError(
                "cannot combine a class on %s with a class on %s"
                % (self.side.value, other.side.value)
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_side(other)
        return DivisorClass(self.side, self.h + other.h, self.f + other.f)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_side(other)
        return DivisorClass(self.side, self.h - other.h, self.f - other.f)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.side, -self.h, -self.f)

    def scale(self, t: RationalLike) -> "DivisorClass":
        t = as_fraction(t)
        return DivisorClass(self.side, t * self.h, t * self.f)

    def is_zero(self) -> bool:
        return self.h == 0 and self.f == 0


def zero_class(side: Side) -> DivisorClass:
    return DivisorClass(side, 0, 0)


def section_class(side: Side) -> DivisorClass:
    """H on the surface, Theta on the Jacobian."""
    return DivisorClass(side, 1, 0)


def fibre_class(side: Side) -> DivisorClass:
    """mu on the surface, muhat on the Jacobian."""
    return DivisorClass(side, 0, 1)


def intersect(u: DivisorClass, v: DivisorClass, geo: SurfaceGeometry) -> Fraction:
    """Intersection pairing: H^2 = -e, H.mu = 1, mu^2 = 0 (same on the dual)."""
    u._check_side(v)
    return -geo.e * u.h * v.h + u.h * v.f + u.f * v.h


def varpi(u: DivisorClass) -> DivisorClass:
    """Transport H -> Theta, mu -> muhat along the surface/Jacobian isomorphism."""
    if u.side is not Side.X:
        raise SideMismatchError("varpi takes classes on X, got %s" % u.side.value)
    return DivisorClass(Side.XHAT, u.h, u.f)


def varpi_inverse(u: DivisorClass) -> DivisorClass:
    """Transport Theta -> H, muhat -> mu."""
    if u.side is not Side.XHAT:
        raise SideMismatchError(
            "varpi_inverse takes classes on Xhat, got %s" % u.side.value
        )
    return DivisorClass(Side.X, u.h, u.f)


def canonical_class(geo: SurfaceGeometry, side: Side = Side.X) -> DivisorClass:
    """Canonical class K = (2g - 2 + e) * fibre, from K = p*(K_B + E)."""
    return fibre_class(side).scale(2 * geo.genus - 2 + geo.e)


@dataclass(frozen=True)
class GradedClass:
    """Even-degree class 1-part + divisor-part + (fundamental class)-part.

    Products truncate above degree 4; the degree-4 cross term uses the
    intersection pairing, so multiplication needs the geometry.
    """

    deg0: Fraction
    deg2: DivisorClass
    deg4: Fraction

    def __post_init__(self):
        object.__setattr__(self, "deg0", as_fraction(self.deg0))
        object.__setattr__(self, "deg4", as_fraction(self.deg4))

    def mul(self, other: "GradedClass", geo: SurfaceGeometry) -> "GradedClass":
        self.deg2._check_side(other.deg2)
        return GradedClass(
            self.deg0 * other.deg0,
            other.deg2.scale(self.deg0) + self.deg2.scale(other.deg0),
            self.deg0 * other.deg4
            + self.deg4 * other.deg0
            + intersect(self.deg2, other.deg2, geo),
        )


def todd_relative(geo: SurfaceGeometry, side: Side = Side.X) -> GradedClass:
    """Todd class of the virtual relative tangent bundle: 1 - (e/2)*fibre + e*w."""
    return GradedClass(
        Fraction(1),
        fibre_class(side).scale(Fraction(-geo.e, 2)),
        Fraction(geo.e),
    )


def chi_divisor_curve(c: DivisorClass, geo: SurfaceGeometry) -> Fraction:
    """chi(O_C) of an effective divisor C on the Jacobian side, by adjunction.

    Requires positive fibre degree C.muhat > 0; classes supported on fibres
    (or the zero class) are rejected.
    """
    if c.side is not Side.XHAT:
        raise SideMismatchError(
            "chi_divisor_curve expects a class on Xhat, got %s" % c.side.value
        )
    if intersect(c, fibre_class(Side.XHAT), geo) <= 0:
        raise ValueError(
            "chi_divisor_curve needs an effective class with positive fibre "
            "degree; got %r" % (c,)
        )
    k = canonical_class(geo, Side.XHAT)
    return -intersect(c, c + k, geo) / 2
