"""Exact-arithmetic invariants of sheaves on elliptic surfaces with a section."""

from .geometry import (
    DivisorClass,
    GradedClass,
    Side,
    SideMismatchError,
    SurfaceGeometry,
    canonical_class,
    chi_divisor_curve,
    fibre_class,
    intersect,
    section_class,
    todd_relative,
    varpi,
    varpi_inverse,
    zero_class,
)
from .fourier_mukai import (
    ChernCharacter,
    Polarization,
    fibre_invariants,
    fm_inverse_ch,
    fm_transform_ch,
    wit1_transform_ch,
)
from .spectral import (
    CoverClass,
    CoverSheafInvariants,
    HilbertPolynomial,
    cover_invariants,
    cover_sheaf_ch_on_cover_side,
    cover_sheaf_to_surface_ch,
    degree_on_cover,
    hilbert_from_simpson,
    simpson_from_hilbert,
)
from .stability import (
    CandidateBox,
    SEquivalenceClass,
    SEquivalencePart,
    SubsheafCandidate,
    ThresholdReport,
    destabilizer_scan,
    fitting_cycle,
    is_destabilizing,
    slope,
    sym_point,
    threshold_b0,
)

__all__ = [
    "CandidateBox",
    "ChernCharacter",
    "CoverClass",
    "CoverSheafInvariants",
    "DivisorClass",
    "GradedClass",
    "HilbertPolynomial",
    "Polarization",
    "SEquivalenceClass",
    "SEquivalencePart",
    "Side",
    "SideMismatchError",
    "SubsheafCandidate",
    "SurfaceGeometry",
    "ThresholdReport",
    "canonical_class",
    "chi_divisor_curve",
    "cover_invariants",
    "cover_sheaf_ch_on_cover_side",
    "cover_sheaf_to_surface_ch",
    "degree_on_cover",
    "destabilizer_scan",
    "fibre_class",
    "fibre_invariants",
    "fitting_cycle",
    "fm_inverse_ch",
    "fm_transform_ch",
    "hilbert_from_simpson",
    "intersect",
    "is_destabilizing",
    "section_class",
    "simpson_from_hilbert",
    "slope",
    "sym_point",
    "threshold_b0",
    "todd_relative",
    "varpi",
    "varpi_inverse",
    "wit1_transform_ch",
    "zero_class",
]
