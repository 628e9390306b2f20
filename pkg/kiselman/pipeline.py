"""
Master Verification Pipeline
전체 검증 파이프라인

``run_pipeline`` enumerates Kₙ once and runs the requested suites on it:
``rewrite`` (confluence and normal forms), ``structure``, ``repr`` and
``algebra``. ``all`` runs the four in that order.
"""

import logging
import random
from typing import Dict, Optional

from .algebra.pipeline import AlgebraPipeline
from .core.report import CheckReport
from .core.rewrite import confluence_check, is_irreducible, normalize, reachable_normal_forms
from .core.words import content, is_canonical, random_word
from .representations.pipeline import RepresentationPipeline
from .semigroup.deletion import locality_sample
from .semigroup.pipeline import StructurePipeline
from .semigroup.table import SemigroupTable, enumerate_semigroup

logger = logging.getLogger("kiselman.pipeline")

SUITES = ("all", "rewrite", "structure", "repr", "algebra")
PRESETS = ("default", "acceptance", "quick")


class RewriteSuite:
    """
    Randomised and exhaustive checks of the rewriting system.

    Random words use ``random.Random(seed)``; each word's confluence run gets
    its own seed drawn from that generator.
    """

    # 기본 설정값 (Default Configuration)
    DEFAULT_CONFIG = {
        'confluence_words': 1_000,
        'confluence_trials': 4,
        'max_word_length': 12,
        'oracle_words': 200,
        'oracle_max_length': 8,
        'locality_samples': 1_000,
    }

    PRESETS = {
        'acceptance': {
            'confluence_words': 10_000,
            'confluence_trials': 4,
            'max_word_length': 12,
            'oracle_words': 1_000,
            'oracle_max_length': 9,
            'locality_samples': 10_000,
        },
        'quick': {
            'confluence_words': 200,
            'confluence_trials': 2,
            'max_word_length': 10,
            'oracle_words': 50,
            'oracle_max_length': 7,
            'locality_samples': 100,
        },
    }

    def __init__(self, preset: str = "default", verbose: bool = False):
        self.verbose = verbose
        self.current_settings = self.DEFAULT_CONFIG.copy()
        if preset != "default":
            self.load_preset(preset)

    def load_preset(self, preset_name: str) -> 'RewriteSuite':
        self.current_settings = self.DEFAULT_CONFIG.copy()
        if preset_name in self.PRESETS:
            self.current_settings.update(self.PRESETS[preset_name])
        elif preset_name != "default":
            logger.warning("Unknown preset '%s'. Loading default.", preset_name)
        return self

    def get_current_settings(self) -> Dict[str, int]:
        return self.current_settings.copy()

    def run(self, table: SemigroupTable, seed: Optional[int] = None) -> CheckReport:
        n = table.rank
        s = self.current_settings
        report = CheckReport(n, "rewrite", seed)
        rng = random.Random(seed)

        if self.verbose:
            print(f"[RewriteSuite] {s['confluence_words']} random words on K_{n}")
        failures, broken = [], []
        for _ in range(s['confluence_words']):
            w = random_word(n, s['max_word_length'], rng)
            if not confluence_check(w, s['confluence_trials'], rng.randrange(2 ** 32)):
                failures.append(str(w))
            v = normalize(w)
            if (content(v) != content(w) or normalize(v) != v
                    or is_canonical(w) != is_irreducible(w) or v not in table.index):
                broken.append(str(w))
        report.add("confluence", not failures,
                   f"{s['confluence_words']} words x {s['confluence_trials']} orders", failures)
        report.add("normal_forms", not broken, "canonical, content-preserving, in K_n", broken)

        if self.verbose:
            print(f"[RewriteSuite] exhaustive reduction orders on {s['oracle_words']} short words")
        oracle = []
        for _ in range(s['oracle_words']):
            w = random_word(n, s['oracle_max_length'], rng)
            if reachable_normal_forms(w) != frozenset([normalize(w)]):
                oracle.append(str(w))
        report.add("all_orders_agree", not oracle, counterexamples=oracle)

        if n >= 2:
            checked, violations = locality_sample(table, s['locality_samples'], rng.randrange(2 ** 32))
            report.add("trace_locality", not violations, f"{checked} traces", violations)
        else:
            report.skip("trace_locality", "needs n >= 2")

        logger.info("rewrite suite on K_%d: %s", n, "pass" if report.passed else "FAIL")
        return report


def run_pipeline(
    n: int,
    suite: str = "all",
    seed: Optional[int] = None,
    preset: str = "default",
    element_cap: Optional[int] = None,
    verbose: bool = False
) -> CheckReport:
    """
    전체 검증 파이프라인을 실행함 (Master Pipeline).

    1. Kₙ 을 열거함 (element_cap 초과 시 ResourceLimitError).
    2. 선택한 스위트(rewrite, structure, repr, algebra)를 순서대로 실행함.
    3. 모든 결과를 하나의 CheckReport 로 합침.

    :param n: rank
    :type n: int
    :param suite: one of ``all``, ``rewrite``, ``structure``, ``repr``, ``algebra``
    :type suite: str
    :param seed: seed of every randomised check
    :type seed: int or None
    :param preset: budget preset (``default``, ``acceptance``, ``quick``)
    :type preset: str
    :param element_cap: enumeration cap override
    :type element_cap: int or None
    :param verbose: print progress lines
    :type verbose: bool
    :return: combined report
    :rtype: CheckReport
    :raises ValueError: on an unknown suite
    :raises ResourceLimitError: if Kₙ exceeds the enumeration cap

    Example:
        >>> run_pipeline(3, "all", seed=0).passed
        True
    """
    if suite not in SUITES:
        raise ValueError(f"Unknown suite '{suite}'. Use one of {SUITES}")

    if verbose:
        print(f"> Starting checks for K_{n} (suite: {suite}, preset: {preset})")
    table = enumerate_semigroup(n, element_cap=element_cap)

    runners = {
        "rewrite": RewriteSuite,
        "structure": StructurePipeline,
        "repr": RepresentationPipeline,
        "algebra": AlgebraPipeline,
    }
    selected = list(runners) if suite == "all" else [suite]

    report = CheckReport(n, suite, seed)
    for name in selected:
        part = runners[name](preset=preset, verbose=verbose).run(table, seed)
        report.extend(part)
        if verbose:
            mark = "V" if part.passed else "X"
            print(f"{mark} {name}: {len(part.results)} checks")

    logger.info("K_%d suite %s: %s", n, suite, "pass" if report.passed else "FAIL")
    return report
