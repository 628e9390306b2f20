"""
Semigroup algebra of Kₙ over the rationals
유리수체 위의 반군대수 ℚKₙ
"""

from .corner import CORNERS, corner_dimension, corner_dimensions, size_recursion_check
from .element import (
    AlgebraElement,
    SemigroupAlgebra,
    algebra_multiply,
    linear_psi,
    rho,
    rho_on_algebra,
    rho_quotient_count,
    rho_vector,
)
from .idempotents import (
    idempotent_system_check,
    kiselman_projection,
    primitive_idempotent,
    primitive_idempotent_recursion_check,
    primitive_idempotents,
    projection_check,
)
from .module import (
    IdealModule,
    module_faithfulness_check,
    module_homomorphism_check,
    nonfaithful_projective_check,
    nonfaithful_projective_witness,
    projective_module,
    projective_module_dimension_check,
)
from .pipeline import AlgebraPipeline, run_algebra_checks

__all__ = [
    "AlgebraElement",
    "SemigroupAlgebra",
    "algebra_multiply",
    "linear_psi",
    "rho",
    "rho_on_algebra",
    "rho_quotient_count",
    "rho_vector",
    "primitive_idempotent",
    "primitive_idempotents",
    "idempotent_system_check",
    "primitive_idempotent_recursion_check",
    "kiselman_projection",
    "projection_check",
    "CORNERS",
    "corner_dimension",
    "corner_dimensions",
    "size_recursion_check",
    "IdealModule",
    "projective_module",
    "module_homomorphism_check",
    "module_faithfulness_check",
    "projective_module_dimension_check",
    "nonfaithful_projective_witness",
    "nonfaithful_projective_check",
    "AlgebraPipeline",
    "run_algebra_checks",
]
