"""Cell complexes of the fiber: tessellation, triangulations, spine, presentations."""
from .complex import CellComplex, ComplexError, homology_from_matrices, parse_incidence
from .delta import build_delta
from .intersection import A, Q, intersection_suite
from .polytopes import build_pi_complex
from .spine import (build_spine, phi_star_abelian_check, presentation_from_spine,
                    twelve_generator_presentation)
from .suite import build_pi, complexes_certificates, delta_homology
from .symmetries import SymmetryAction, verify_symmetries
from .words import GroupPresentation

__all__ = [
    "A", "CellComplex", "ComplexError", "GroupPresentation", "Q", "SymmetryAction",
    "build_delta", "build_pi", "build_pi_complex", "build_spine", "complexes_certificates",
    "delta_homology", "homology_from_matrices", "intersection_suite", "parse_incidence",
    "phi_star_abelian_check", "presentation_from_spine", "twelve_generator_presentation",
    "verify_symmetries",
]
