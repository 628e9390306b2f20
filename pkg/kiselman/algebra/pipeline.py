"""
Algebra Verification Pipeline
반군대수 검증 파이프라인

Runs the ℚKₙ checks (ρ_X, primitive idempotents, projections, corners and
the projective module) on one enumerated table and collects a CheckReport.
"""

import logging
from typing import Dict, Optional

import numpy as np

from ..core.report import CheckReport
from ..core.words import all_contents
from ..semigroup.table import SemigroupTable, enumerate_semigroup
from .corner import corner_dimensions
from .element import SemigroupAlgebra, rho_quotient_count, rho_vector
from .idempotents import (
    idempotent_system_check,
    primitive_idempotent_recursion_check,
    projection_check,
)
from .module import (
    module_faithfulness_check,
    module_homomorphism_check,
    nonfaithful_projective_check,
    projective_module,
    projective_module_dimension_check,
)

logger = logging.getLogger("kiselman.algebra")


class AlgebraPipeline:
    """
    Verification of the semigroup algebra ℚKₙ.

    Each check is limited by a maximum rank in ``current_settings``; ranks
    above the limit are reported as skipped.
    """

    # 기본 설정값 (Default Configuration)
    DEFAULT_CONFIG = {
        'idempotent_max_rank': 4,
        'corner_max_rank': 4,
        'module_max_rank': 4,
        'annihilation_max_rank': 3,
    }

    PRESETS = {
        'acceptance': {
            'idempotent_max_rank': 4,
            'corner_max_rank': 4,
            'module_max_rank': 4,
            'annihilation_max_rank': 3,
        },
        'quick': {
            'idempotent_max_rank': 3,
            'corner_max_rank': 3,
            'module_max_rank': 3,
            'annihilation_max_rank': 2,
        },
    }

    def __init__(self, preset: str = "default", verbose: bool = False):
        self.verbose = verbose
        self.current_settings = self.DEFAULT_CONFIG.copy()
        if preset != "default":
            self.load_preset(preset)

    def load_preset(self, preset_name: str) -> 'AlgebraPipeline':
        self.current_settings = self.DEFAULT_CONFIG.copy()
        if preset_name in self.PRESETS:
            self.current_settings.update(self.PRESETS[preset_name])
        elif preset_name != "default":
            logger.warning("Unknown preset '%s'. Loading default.", preset_name)
        return self

    def get_current_settings(self) -> Dict[str, int]:
        return self.current_settings.copy()

    def _log(self, message: str) -> None:
        logger.info(message)
        if self.verbose:
            print(f"[AlgebraPipeline] {message}")

    def _within(self, report: CheckReport, name: str, key: str) -> bool:
        limit = self.current_settings[key]
        if report.n > limit:
            report.skip(name, f"n > {key} ({limit})")
            return False
        self._log(f"{name} on K_{report.n}")
        return True

    def run(self, table: SemigroupTable, seed: Optional[int] = None) -> CheckReport:
        """
        Run every algebra check on ``table``.

        :param table: enumerated Kₙ
        :type table: SemigroupTable
        :param seed: recorded in the report; the algebra checks are deterministic
        :return: report of the ``algebra`` suite
        :rtype: CheckReport
        """
        n = table.rank
        report = CheckReport(n, "algebra", seed)
        algebra = SemigroupAlgebra(table)

        self._check_rho(report, table)

        if self._within(report, "idempotent_system", 'idempotent_max_rank'):
            violations = idempotent_system_check(algebra)
            report.add("idempotent_system", not violations,
                       f"{2 ** n} primitive idempotents", violations)
            violations = primitive_idempotent_recursion_check(algebra)
            report.add("primitive_idempotent_recursion", not violations,
                       counterexamples=violations)
            violations = projection_check(algebra)
            report.add("projections", not violations, "psi(pi_i) = D_i", violations)

        if self._within(report, "corners", 'corner_max_rank'):
            dims = corner_dimensions(algebra)
            corners, previous = dims["corners"], dims["previous_size"]
            report.add("corner_orthogonal", corners["a_n,e-a_n"] == 0,
                       f"dim a_n QK_n (e-a_n) = {corners['a_n,e-a_n']}")
            same = corners["a_n,a_n"] == corners["e-a_n,e-a_n"] == previous
            report.add("corner_isomorphism", same,
                       f"{corners['a_n,a_n']}, {corners['e-a_n,e-a_n']} vs |K_{n - 1}| = {previous}")
            recursion = table.size == 2 * previous + corners["e-a_n,a_n"]
            report.add("size_recursion", recursion,
                       f"{table.size} = 2*{previous} + {corners['e-a_n,a_n']}")

        if self._within(report, "projective_module", 'module_max_rank'):
            module = projective_module(table)
            failures = projective_module_dimension_check(module, algebra)
            failures += module_homomorphism_check(module)
            report.add("projective_module", not failures,
                       f"dimension {module.dimension}", failures)
            report.add("projective_module_faithful", module_faithfulness_check(module))

        if self._within(report, "nonfaithful_projectives", 'annihilation_max_rank'):
            failures = nonfaithful_projective_check(algebra)
            report.add("nonfaithful_projectives", not failures, counterexamples=failures)

        return report

    def _check_rho(self, report: CheckReport, table: SemigroupTable) -> None:
        n = table.rank
        self._log(f"rho_X on K_{n}")
        contents = all_contents(n)
        vectors = {X: rho_vector(table, X) for X in contents}

        if table.has_product_table:
            P = table.product
            broken = [
                str(X) for X, v in vectors.items()
                if not np.array_equal(v[P], np.outer(v, v))
            ]
            report.add("rho_multiplicative", not broken, counterexamples=broken)
        else:
            report.skip("rho_multiplicative", "product table exceeds product_cap")

        gens = [table.generator(i) for i in range(1, n + 1)]
        signatures = {tuple(int(v[g]) for g in gens) for v in vectors.values()}
        report.add("rho_distinct", len(signatures) == 2 ** n,
                   f"{len(signatures)} distinct on generators")
        count = rho_quotient_count(n)
        report.add("rho_quotient_count", count == 2 ** n - 1, f"{count} vanish on the zero")


def run_algebra_checks(
    n: int,
    preset: str = "default",
    element_cap: Optional[int] = None,
    verbose: bool = False
) -> CheckReport:
    """Enumerate Kₙ and run :class:`AlgebraPipeline` on it."""
    table = enumerate_semigroup(n, element_cap=element_cap)
    return AlgebraPipeline(preset=preset, verbose=verbose).run(table)
