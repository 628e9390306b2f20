"""
Structure Verification Pipeline
Kₙ 구조 검증 파이프라인

Runs the structural checks on an enumerated Kₙ: sizes and lengths, the zero,
idempotents, nilpotent blocks, Green's relations, symmetries, isolated
subsemigroups and the deletion properties around a_1.
"""

import logging
from typing import Dict, Optional

import numpy as np

from ..core.errors import ResourceLimitError
from ..core.report import CheckReport
from ..core.words import (
    all_contents,
    is_canonical,
    length_bound,
    letter_multiplicity_bounds,
    multiplicity,
    sharpness_word,
)
from ..core.rewrite import normalize
from .deletion import deletion_property_report
from .isolated import (
    completely_isolated_check,
    is_completely_isolated,
    is_isolated,
    minimal_isolated_subsemigroups,
    preimage_indices,
    union_closed_families,
)
from .structure import (
    GREEN_RELATIONS,
    antiautomorphisms,
    automorphisms,
    antiautomorphism_tau,
    content_is_homomorphism,
    green_classes,
    idempotent,
    idempotent_indices,
    idempotent_product,
    idempotents_commute,
    is_idempotent,
    maximal_subgroups_trivial,
    nilpotent_partition,
    nilpotent_subsemigroup,
    shifted_subsemigroup_size,
)
from .table import SemigroupTable, enumerate_semigroup

logger = logging.getLogger("kiselman.semigroup")

# |K_n| for n = 1..6; no closed formula is known
KNOWN_SIZES = {1: 2, 2: 5, 3: 18, 4: 115, 5: 1710, 6: 83973}


class StructurePipeline:
    """
    Structural verification of Kₙ.

    Exhaustive checks are limited by maximum ranks in ``current_settings``
    and reported as skipped above them.
    """

    # 기본 설정값 (Default Configuration)
    DEFAULT_CONFIG = {
        'associativity_max_rank': 4,
        'idempotent_pairs_max_rank': 4,
        'green_max_rank': 4,
        'symmetry_max_rank': 4,
        'isolated_max_rank': 3,
        'deletion_budget': 2_000,
    }

    PRESETS = {
        'acceptance': {
            'associativity_max_rank': 4,
            'idempotent_pairs_max_rank': 4,
            'green_max_rank': 4,
            'symmetry_max_rank': 5,
            'isolated_max_rank': 3,
            'deletion_budget': 10_000,
        },
        'quick': {
            'associativity_max_rank': 3,
            'idempotent_pairs_max_rank': 3,
            'green_max_rank': 3,
            'symmetry_max_rank': 3,
            'isolated_max_rank': 2,
            'deletion_budget': 200,
        },
    }

    def __init__(self, preset: str = "default", verbose: bool = False):
        self.verbose = verbose
        self.current_settings = self.DEFAULT_CONFIG.copy()
        if preset != "default":
            self.load_preset(preset)

    def load_preset(self, preset_name: str) -> 'StructurePipeline':
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
            print(f"[StructurePipeline] {message}")

    def _within(self, report: CheckReport, name: str, key: str) -> bool:
        limit = self.current_settings[key]
        if report.n > limit:
            report.skip(name, f"n > {key} ({limit})")
            return False
        self._log(f"{name} on K_{report.n}")
        return True

    def run(self, table: SemigroupTable, seed: Optional[int] = None) -> CheckReport:
        """
        Run every structural check on ``table``.

        :param table: enumerated Kₙ
        :type table: SemigroupTable
        :param seed: seed for the sampled deletion checks
        :type seed: int or None
        :return: report of the ``structure`` suite
        :rtype: CheckReport
        """
        report = CheckReport(table.rank, "structure", seed)
        self._check_elements(report, table)
        if not table.has_product_table:
            report.skip("product_table", "product table exceeds product_cap")
            return report

        self._check_products(report, table)
        self._check_idempotents(report, table)
        self._check_nilpotent(report, table)
        self._check_green(report, table)
        self._check_symmetries(report, table)
        self._check_isolated(report, table)
        self._check_deletion(report, table, seed)
        return report

    # -------------------------------------------------------------------------
    # elements and lengths
    # -------------------------------------------------------------------------

    def _check_elements(self, report: CheckReport, table: SemigroupTable) -> None:
        n = table.rank
        self._log(f"elements of K_{n}")
        if n in KNOWN_SIZES:
            report.add("size", table.size == KNOWN_SIZES[n],
                       f"|K_{n}| = {table.size}, expected {KNOWN_SIZES[n]}")
        bound = 1 + n ** length_bound(n)
        report.add("size_bound", table.size <= bound, f"{table.size} <= {bound}")

        bad = [str(w) for w in table.elements if not is_canonical(w)]
        report.add("canonical_elements", not bad, counterexamples=bad)

        caps = letter_multiplicity_bounds(n)
        over = [
            str(w) for w in table.elements
            if any(multiplicity(w, i) > caps[i - 1] for i in range(1, n + 1))
        ]
        report.add("multiplicity_bounds", not over, counterexamples=over)

        longest = max(len(w) for w in table.elements)
        report.add("max_length", longest == length_bound(n),
                   f"max length {longest}, L({n}) = {length_bound(n)}")

        s = sharpness_word(n)
        ok = is_canonical(s) and len(s) == length_bound(n) and normalize(s) == s
        report.add("sharpness_word", ok, str(s))

    # -------------------------------------------------------------------------
    # product table
    # -------------------------------------------------------------------------

    def _check_products(self, report: CheckReport, table: SemigroupTable) -> None:
        P = table.product
        if self._within(report, "associativity", 'associativity_max_rank'):
            failures = []
            for x in range(table.size):
                # (xy)z against x(yz) for all y, z at once
                if not np.array_equal(P[P[x, :], :], P[x, P]):
                    failures.append(str(table.word(x)))
            report.add("associativity", not failures, counterexamples=failures)

        z = table.zero
        zeros = np.full(table.size, z)
        report.add("zero_element",
                   bool(np.array_equal(P[:, z], zeros) and np.array_equal(P[z, :], zeros)),
                   f"zero = {table.word(z)}")
        report.add("content_homomorphism", content_is_homomorphism(table))

        n = table.rank
        if n >= 2:
            shifted = shifted_subsemigroup_size(table)
            previous = enumerate_semigroup(n - 1).size
            report.add("shifted_subsemigroup", shifted == previous,
                       f"{shifted} elements avoid a_1, |K_{n - 1}| = {previous}")

    # -------------------------------------------------------------------------
    # idempotents
    # -------------------------------------------------------------------------

    def _check_idempotents(self, report: CheckReport, table: SemigroupTable) -> None:
        n = table.rank
        P = table.product
        found = set(idempotent_indices(table))
        expected = {table.element_of(idempotent(X)) for X in all_contents(n)}
        report.add("idempotent_census", found == expected and len(found) == 2 ** n,
                   f"{len(found)} idempotents")

        if self._within(report, "idempotent_products", 'idempotent_pairs_max_rank'):
            failures = []
            for X in all_contents(n):
                for Y in all_contents(n):
                    holds, value = idempotent_product(X, Y)
                    if holds != is_idempotent(value) or (holds and value != idempotent(X | Y)):
                        failures.append(f"e_{X} e_{Y}")
            report.add("idempotent_products", not failures, counterexamples=failures)

        powers = []
        for x in range(table.size):
            X = table.content_of(x)
            if table.power(x, len(X)) != table.element_of(idempotent(X)):
                powers.append(str(table.word(x)))
        report.add("powers_reach_idempotent", not powers, counterexamples=powers)

        order = []
        for f1 in sorted(found):
            for f2 in sorted(found):
                below = P[f1, f2] == f1 and P[f2, f1] == f1
                if below != table.content_of(f2).issubset(table.content_of(f1)):
                    order.append(f"{table.word(f1)} <= {table.word(f2)}")
        report.add("natural_order", not order, counterexamples=order)

        if n >= 2:
            report.add("idempotents_do_not_commute", not idempotents_commute(table))

    # -------------------------------------------------------------------------
    # nilpotent blocks and Green's relations
    # -------------------------------------------------------------------------

    def _check_nilpotent(self, report: CheckReport, table: SemigroupTable) -> None:
        failures = []
        for X in all_contents(table.rank):
            nil = nilpotent_subsemigroup(table, X)
            if nil.nilpotency_class != max(1, len(X)) or nil.zero != idempotent(X):
                failures.append(f"Nil({X}): class {nil.nilpotency_class}, zero {nil.zero}")
        partition = nilpotent_partition(table)
        covered = sum(len(block) for block in partition.values())
        if covered != table.size:
            failures.append(f"blocks cover {covered} of {table.size} elements")
        report.add("nilpotent_subsemigroups", not failures, counterexamples=failures)

    def _check_green(self, report: CheckReport, table: SemigroupTable) -> None:
        if not self._within(report, "green_relations", 'green_max_rank'):
            return
        nontrivial = [r for r in GREEN_RELATIONS if not green_classes(table, r).is_trivial]
        report.add("green_relations", not nontrivial,
                   f"{len(GREEN_RELATIONS)} relations", nontrivial)
        report.add("maximal_subgroups_trivial", maximal_subgroups_trivial(table))

    # -------------------------------------------------------------------------
    # symmetries
    # -------------------------------------------------------------------------

    def _check_symmetries(self, report: CheckReport, table: SemigroupTable) -> None:
        n = table.rank
        tau = np.array([table.element_of(antiautomorphism_tau(w)) for w in table.elements])
        P = table.product
        ok = np.array_equal(tau[tau], np.arange(table.size)) and np.array_equal(tau[P], P.T[np.ix_(tau, tau)])
        report.add("tau_antiautomorphism", bool(ok))

        if self._within(report, "automorphisms", 'symmetry_max_rank'):
            identity = tuple(range(1, n + 1))
            autos = automorphisms(table)
            report.add("automorphisms", autos == [identity], f"{autos}")
            antis = antiautomorphisms(table)
            report.add("antiautomorphisms", antis == [identity[::-1]], f"{antis}")

    # -------------------------------------------------------------------------
    # isolated subsemigroups and deletion properties
    # -------------------------------------------------------------------------

    def _check_isolated(self, report: CheckReport, table: SemigroupTable) -> None:
        if not self._within(report, "isolated_subsemigroups", 'isolated_max_rank'):
            return
        n = table.rank
        failures = []
        try:
            families = union_closed_families(n)
        except ResourceLimitError as e:
            report.skip("isolated_subsemigroups", str(e))
            return
        for T in families:
            idx = preimage_indices(table, T)
            label = "{" + ", ".join(str(X) for X in sorted(T, key=lambda X: X.bits)) + "}"
            if not is_isolated(table, idx):
                failures.append(f"{label} not isolated")
            if completely_isolated_check(T, n) != is_completely_isolated(table, idx):
                failures.append(f"{label} complete isolation mismatch")
        report.add("isolated_subsemigroups", not failures,
                   f"{len(families)} union-closed families", failures)

        minimal = minimal_isolated_subsemigroups(table)
        blocks = sorted(
            (sorted(block, key=lambda w: table.index[w]) for block in nilpotent_partition(table).values()),
            key=lambda b: [table.index[w] for w in b],
        )
        report.add("minimal_isolated_are_nil", minimal == blocks,
                   f"{len(minimal)} minimal isolated subsemigroups")

    def _check_deletion(self, report: CheckReport, table: SemigroupTable, seed: Optional[int]) -> None:
        if table.rank < 2:
            report.skip("deletion_separation", "needs n >= 2")
            report.skip("deletion_cancellation", "needs n >= 2")
            return
        budget = self.current_settings['deletion_budget']
        for mode, name in (("prop15", "deletion_separation"), ("prop16", "deletion_cancellation")):
            self._log(f"{name} on K_{table.rank}")
            result = deletion_property_report(table, mode, budget, seed)
            how = "exhaustive" if result.exhaustive else "sampled"
            detail = f"{result.instances} instances ({how})"
            if mode == "prop16":
                detail += f", {result.locality_checked} traces local"
            report.add(name, result.passed, detail,
                       result.counterexamples + result.locality_violations)


def run_structure_checks(
    n: int,
    preset: str = "default",
    seed: Optional[int] = None,
    element_cap: Optional[int] = None,
    verbose: bool = False
) -> CheckReport:
    """Enumerate Kₙ and run :class:`StructurePipeline` on it."""
    table = enumerate_semigroup(n, element_cap=element_cap)
    return StructurePipeline(preset=preset, verbose=verbose).run(table, seed)
