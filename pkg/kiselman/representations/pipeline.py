"""
Representation Verification Pipeline
행렬 표현 검증 파이프라인

Checks the relations, faithfulness, heights and integer bounds of ψₙ, κₙ
and κ′ₙ on one enumerated table.
"""

import logging
from typing import Dict, Optional

from ..core.report import CheckReport
from ..core.rewrite import normalize
from ..core.words import Word
from ..semigroup.table import SemigroupTable, enumerate_semigroup
from .faithful import (
    faithfulness_check,
    kappa_prime_bound_check,
    relations_check,
    specialization_check,
)
from .matrices import (
    MatrixRepresentation,
    cyclic_vector_check,
    height_decrease_check,
    matrices_equal,
    nilpotency_class_of_matrix,
    psi,
)

logger = logging.getLogger("kiselman.repr")

# ψ₄ identifies these two distinct elements
PSI4_WITNESS = ((3, 4, 2, 1, 3, 2), (3, 2, 4, 3, 1, 2))

# ψₙ is faithful exactly up to this rank
PSI_FAITHFUL_MAX_RANK = 3


class RepresentationPipeline:
    """
    Verification of the matrix representations of Kₙ.

    Symbolic and big-integer checks are limited by maximum ranks in
    ``current_settings``; ranks above them are reported as skipped.
    """

    # 기본 설정값 (Default Configuration)
    DEFAULT_CONFIG = {
        'kappa_max_rank': 4,
        'kappa_prime_max_rank': 3,
        'height_max_rank': 4,
    }

    PRESETS = {
        'acceptance': {
            'kappa_max_rank': 4,
            'kappa_prime_max_rank': 3,
            'height_max_rank': 4,
        },
        'quick': {
            'kappa_max_rank': 3,
            'kappa_prime_max_rank': 2,
            'height_max_rank': 3,
        },
    }

    def __init__(self, preset: str = "default", verbose: bool = False):
        self.verbose = verbose
        self.current_settings = self.DEFAULT_CONFIG.copy()
        if preset != "default":
            self.load_preset(preset)

    def load_preset(self, preset_name: str) -> 'RepresentationPipeline':
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
            print(f"[RepresentationPipeline] {message}")

    def _within(self, report: CheckReport, name: str, key: str) -> bool:
        limit = self.current_settings[key]
        if report.n > limit:
            report.skip(name, f"n > {key} ({limit})")
            return False
        self._log(f"{name} on K_{report.n}")
        return True

    def run(self, table: SemigroupTable, seed: Optional[int] = None) -> CheckReport:
        """
        Run every representation check on ``table``.

        :param table: enumerated Kₙ
        :type table: SemigroupTable
        :param seed: recorded in the report; the checks are deterministic
        :return: report of the ``repr`` suite
        :rtype: CheckReport
        """
        n = table.rank
        report = CheckReport(n, "repr", seed)

        self._check_psi(report, table)

        if self._within(report, "kappa_relations", 'kappa_max_rank'):
            violations = relations_check("kappa", n)
            report.add("kappa_relations", not violations, counterexamples=violations)
            faithful, witness = faithfulness_check(table, "kappa")
            report.add("kappa_faithful", faithful, counterexamples=_pair(witness))
            mismatched = specialization_check(table)
            report.add("kappa_specialization", not mismatched,
                       "xi = 1 gives psi", mismatched)

        if self._within(report, "kappa_prime_relations", 'kappa_prime_max_rank'):
            violations = relations_check("kappa-prime", n)
            report.add("kappa_prime_relations", not violations, counterexamples=violations)
            faithful, witness = faithfulness_check(table, "kappa-prime")
            report.add("kappa_prime_faithful", faithful, counterexamples=_pair(witness))
            over = kappa_prime_bound_check(table)
            report.add("kappa_prime_bound", not over, "entries below l_n", over)

        return report

    def _check_psi(self, report: CheckReport, table: SemigroupTable) -> None:
        n = table.rank
        self._log(f"psi on K_{n}")
        violations = relations_check("psi", n)
        report.add("psi_relations", not violations, counterexamples=violations)

        images = MatrixRepresentation.psi(table)
        zero_image = images.image(table.zero)
        report.add("psi_zero", not any(v != 0 for v in zero_image.flat),
                   "psi(e_{1..n}) = 0")

        faithful, witness = faithfulness_check(table, "psi", images)
        expected = n <= PSI_FAITHFUL_MAX_RANK
        detail = "faithful" if faithful else f"'{witness[0]}' and '{witness[1]}' collide"
        report.add("psi_faithfulness", faithful == expected, detail)

        if n == 4:
            u, v = (Word(letters, 4) for letters in PSI4_WITNESS)
            ok = normalize(u) != normalize(v) and matrices_equal(psi(u), psi(v))
            report.add("psi_known_witness", ok, f"{u} ~ {v}")

        increasing = psi(Word(tuple(range(1, n + 1)), n))
        k = nilpotency_class_of_matrix(increasing)
        report.add("psi_nilpotency_class", k == n,
                   f"psi(a_1...a_n) has nilpotency class {k}")

        report.add("psi_cyclic_vector", cyclic_vector_check(table))

        if self._within(report, "height_decrease", 'height_max_rank'):
            failures = height_decrease_check(table, images)
            report.add("height_decrease", not failures, counterexamples=failures)


def _pair(witness):
    return [] if witness is None else [str(witness[0]), str(witness[1])]


def run_representation_checks(
    n: int,
    preset: str = "default",
    element_cap: Optional[int] = None,
    verbose: bool = False
) -> CheckReport:
    """Enumerate Kₙ and run :class:`RepresentationPipeline` on it."""
    table = enumerate_semigroup(n, element_cap=element_cap)
    return RepresentationPipeline(preset=preset, verbose=verbose).run(table)
