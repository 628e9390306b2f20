"""
Kiselman Semigroup Module
Kₙ 열거, 곱셈표 및 구조 분석 모듈
"""

from .table import (
    SemigroupEnumerator,
    SemigroupTable,
    enumerate_semigroup,
    multiply,
    right_cayley_graph,
)
from .structure import (
    GREEN_RELATIONS,
    GreenClasses,
    NilpotentSubsemigroup,
    antiautomorphism_tau,
    antiautomorphisms,
    automorphisms,
    content_is_homomorphism,
    green_classes,
    idempotent,
    idempotent_indices,
    idempotent_product,
    idempotents,
    idempotents_commute,
    is_idempotent,
    maximal_subgroups_trivial,
    natural_leq,
    nilpotent_partition,
    nilpotent_subsemigroup,
    power_to_idempotent,
    shifted_subsemigroup_size,
)
from .isolated import (
    completely_isolated_check,
    is_completely_isolated,
    is_isolated,
    is_subsemigroup,
    is_union_closed,
    isolated_preimage,
    minimal_isolated_subsemigroups,
    union_closed_families,
)
from .deletion import (
    DeletionResult,
    deletion_property_check,
    deletion_property_report,
    locality_sample,
    trace_is_local,
)
from .export import (
    cayley_csv,
    cayley_dot,
    elements_json,
    export_cayley_csv,
    export_cayley_dot,
    export_elements_json,
)
from .pipeline import KNOWN_SIZES, StructurePipeline, run_structure_checks

__all__ = [
    "SemigroupEnumerator",
    "SemigroupTable",
    "enumerate_semigroup",
    "multiply",
    "right_cayley_graph",
    "GREEN_RELATIONS",
    "GreenClasses",
    "NilpotentSubsemigroup",
    "antiautomorphism_tau",
    "antiautomorphisms",
    "automorphisms",
    "content_is_homomorphism",
    "green_classes",
    "idempotent",
    "idempotent_indices",
    "idempotent_product",
    "idempotents",
    "idempotents_commute",
    "is_idempotent",
    "maximal_subgroups_trivial",
    "natural_leq",
    "nilpotent_partition",
    "nilpotent_subsemigroup",
    "power_to_idempotent",
    "shifted_subsemigroup_size",
    "completely_isolated_check",
    "is_completely_isolated",
    "is_isolated",
    "is_subsemigroup",
    "is_union_closed",
    "isolated_preimage",
    "minimal_isolated_subsemigroups",
    "union_closed_families",
    "DeletionResult",
    "deletion_property_check",
    "deletion_property_report",
    "locality_sample",
    "trace_is_local",
    "cayley_csv",
    "cayley_dot",
    "elements_json",
    "export_cayley_csv",
    "export_cayley_dot",
    "export_elements_json",
    "KNOWN_SIZES",
    "StructurePipeline",
    "run_structure_checks",
]
