"""
Matrix Representations Module
ψₙ, κₙ, κ′ₙ 행렬 표현 및 충실성 검증 모듈
"""

from .matrices import (
    IntMatrix,
    MatrixRepresentation,
    cyclic_vector_check,
    height,
    height_decrease_check,
    int_identity,
    kiselman_generator,
    matrices_equal,
    matrix_height,
    matrix_to_json,
    nilpotency_class_of_matrix,
    psi,
)
from .polynomial import (
    MLSequences,
    PolyMatrix,
    XiRing,
    kappa,
    kappa_generator,
    kappa_prime,
    kappa_prime_generator,
    ml_sequences,
    polymatrix_to_json,
    polynomial_to_json,
    specialize,
    xi_ring,
)
from .faithful import (
    KINDS,
    faithfulness_check,
    kappa_prime_bound_check,
    relations_check,
    representation,
    specialization_check,
)
from .pipeline import PSI4_WITNESS, RepresentationPipeline, run_representation_checks

__all__ = [
    "IntMatrix",
    "MatrixRepresentation",
    "cyclic_vector_check",
    "height",
    "height_decrease_check",
    "int_identity",
    "kiselman_generator",
    "matrices_equal",
    "matrix_height",
    "matrix_to_json",
    "nilpotency_class_of_matrix",
    "psi",
    "MLSequences",
    "PolyMatrix",
    "XiRing",
    "kappa",
    "kappa_generator",
    "kappa_prime",
    "kappa_prime_generator",
    "ml_sequences",
    "polymatrix_to_json",
    "polynomial_to_json",
    "specialize",
    "xi_ring",
    "KINDS",
    "faithfulness_check",
    "kappa_prime_bound_check",
    "relations_check",
    "representation",
    "specialization_check",
    "PSI4_WITNESS",
    "RepresentationPipeline",
    "run_representation_checks",
]
