"""Slope stability scans and S-equivalence bookkeeping.

Slopes are taken with respect to polarizations a*H + b*mu.  A numerical
subsheaf candidate (n', c', d') destabilizes F = (n, c1, s) when
a*(n*c' - n'*c) + b*n*d' > 0 (strict: equal slopes are the semistable
boundary).  ``threshold_b0`` inverts this over a finite candidate box to
produce the largest b at which some candidate with d' < 0 still
destabilizes; it is a lower bound for the true threshold, which has no
effective bound.

Fitting cycles of S-equivalence classes are computed with the planar
multiplicity-2 model at the (unique possible) singular point, so a part
of multiplicity m there contributes length 2m - 1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .geometry import SurfaceGeometry, as_fraction
from .fourier_mukai import ChernCharacter, Polarization, fibre_invariants


def slope(f: ChernCharacter, pol: Polarization, geo: SurfaceGeometry) -> Fraction:
    """c1 . (a*H + b*mu) / rank."""
    n, d, c, _ = fibre_invariants(f, geo)
    if n <= 0:
        raise ValueError("slope needs positive rank, got %s" % n)
    return (pol.a * c + pol.b * d) / n


@dataclass(frozen=True)
class SubsheafCandidate:
    """Numerical invariants (n', c', d') of a potential destabilizer."""

    n_prime: int
    c_prime: int
    d_prime: int

    def __post_init__(self):
        if self.n_prime < 1:
            raise ValueError("candidate rank n' must be >= 1")


def destabilization_value(
    cand: SubsheafCandidate,
    f: ChernCharacter,
    pol: Polarization,
    geo: SurfaceGeometry,
) -> Fraction:
    """a*(n*c' - n'*c) + b*n*d'; positive means the candidate destabilizes."""
    n, _, c, _ = fibre_invariants(f, geo)
    if not n > cand.n_prime:
        raise ValueError(
            "candidate rank %d must be < rank(F) = %s" % (cand.n_prime, n)
        )
    return pol.a * (n * cand.c_prime - cand.n_prime * c) + pol.b * n * cand.d_prime


def is_destabilizing(
    cand: SubsheafCandidate,
    f: ChernCharacter,
    pol: Polarization,
    geo: SurfaceGeometry,
) -> bool:
    return destabilization_value(cand, f, pol, geo) > 0


@dataclass(frozen=True)
class CandidateBox:
    """Bounds |c'| <= c_max, |d'| <= d_max for candidate scans."""

    c_max: int
    d_max: int

    def __post_init__(self):
        if self.c_max < 0 or self.d_max < 0:
            raise ValueError("inverted box: bounds must be >= 0")

    def candidates(self, rank):
        """All (n', c', d') with 1 <= n' < rank, in lexicographic order."""
        for n_prime in range(1, int(rank)):
            for c_prime in range(-self.c_max, self.c_max + 1):
                for d_prime in range(-self.d_max, self.d_max + 1):
                    yield SubsheafCandidate(n_prime, c_prime, d_prime)


def destabilizer_scan(
    f: ChernCharacter,
    pol: Polarization,
    box: CandidateBox,
    geo: SurfaceGeometry,
) -> list:
    """All destabilizing candidates in the box, worst violation first.

    Deterministic order: by violation magnitude descending, then by
    (n', c', d') lexicographic.
    """
    n = fibre_invariants(f, geo).n
    if n < 1:
        raise ValueError("scan needs rank >= 1, got %s" % n)
    hits = []
    for cand in box.candidates(n):
        value = destabilization_value(cand, f, pol, geo)
        if value > 0:
            hits.append((value, cand))
    hits.sort(key=lambda vc: (-vc[0], vc[1].n_prime, vc[1].c_prime, vc[1].d_prime))
    return [cand for _, cand in hits]


@dataclass(frozen=True)
class ThresholdReport:
    """Result of a threshold scan over a finite candidate box.

    ``b0`` is exact relative to the box (a lower bound for the true
    threshold).  Candidates with d' = 0 destabilize independently of b
    and are listed separately.
    """

    b0: Fraction
    binding: Optional[SubsheafCandidate]
    rho_used: int
    b_independent: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "b0", as_fraction(self.b0))
        if self.b0 < 0:
            raise ValueError("b0 must be >= 0")


def threshold_b0(
    f: ChernCharacter,
    a,
    box: CandidateBox,
    geo: SurfaceGeometry,
) -> ThresholdReport:
    """Largest b at which some box candidate with d' < 0 destabilizes f.

    For d' < 0 the destabilizing condition a*(n*c'-n'*c) + b*n*d' > 0
    fails exactly when b >= a*(n*c'-n'*c)/(n*(-d')); b0 is the maximum of
    these ratios over the box, clamped at 0.  Requires fibre degree 0.
    """
    a = as_fraction(a)
    if a <= 0:
        raise ValueError("threshold scan needs a > 0")
    n, d, c, _ = fibre_invariants(f, geo)
    if d != 0:
        raise ValueError(
            "threshold_b0 needs fibre degree 0 (semistability gate), got %s" % d
        )
    best: Optional[Fraction] = None
    binding: Optional[SubsheafCandidate] = None
    rho: Optional[int] = None
    b_independent = []
    for cand in box.candidates(n):
        excess = n * cand.c_prime - cand.n_prime * c
        if rho is None or excess > rho:
            rho = excess
        if cand.d_prime == 0:
            if excess > 0:
                b_independent.append(cand)
            continue
        if cand.d_prime > 0:
            continue
        ratio = a * excess / (n * (-cand.d_prime))
        if best is None or ratio > best:
            best, binding = ratio, cand
    b0 = best if best is not None and best > 0 else Fraction(0)
    if best is None or best <= 0:
        binding = None
    return ThresholdReport(
        b0=b0,
        binding=binding,
        rho_used=int(rho) if rho is not None else 0,
        b_independent=tuple(b_independent),
    )


@dataclass(frozen=True)
class SEquivalencePart:
    """One Jordan-Hoelder factor: a fibre point with a multiplicity."""

    point_id: str
    multiplicity: int
    singular: bool = False

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")


@dataclass(frozen=True)
class SEquivalenceClass:
    """Multiset of (point, multiplicity) with at most one singular point."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if sum(1 for part in parts if part.singular) > 1:
            raise ValueError(
                "at most one part may sit at the non-locally-free point"
            )
        if self.total_rank() < 1:
            raise ValueError("total rank must be >= 1")

    def total_rank(self) -> int:
        return sum(part.multiplicity for part in self.parts)


class FittingCycle(NamedTuple):
    cycle: tuple  # sorted (point_id, exponent) pairs
    length: int


def fitting_cycle(cls: SEquivalenceClass) -> FittingCycle:
    """Cycle of the 0-th Fitting ideal of the transform, with its length.

    Smooth points contribute their multiplicity; the singular point has
    the planar multiplicity-2 local model, so exponent m there has length
    2m - 1.  Hence length >= total rank, with equality iff the singular
    multiplicity is at most 1.
    """
    length = 0
    cycle = []
    for part in cls.parts:
        cycle.append((part.point_id, part.multiplicity))
        if part.singular:
            length += 2 * part.multiplicity - 1
        else:
            length += part.multiplicity
    return FittingCycle(tuple(sorted(cycle)), length)


def sym_point(cls: SEquivalenceClass) -> Counter:
    """The class as a degree-n point of the symmetric product: the formal
    sum of its points with multiplicities."""
    point = Counter()
    for part in cls.parts:
        point[part.point_id] += part.multiplicity
    return point
