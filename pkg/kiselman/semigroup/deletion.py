"""
Deletion properties around the letter 1
문자 a_1 삭제 성질 검증

For canonical words over {2..n} and f = e_{2..n}:
- ``prop15``: distinct v, w give distinct v·a_1·f and w·a_1·f.
- ``prop16``: if u ≠ v and both w·a_1·u, w·a_1·v are canonical words, then
  wv ≠ wu, wva_1 ≠ wua_1 and wva_1f ≠ wua_1f.
Alongside ``prop16`` every instance (α, β) = (w, u) with α·a_1·β canonical is
checked for trace locality: normalising αβ by rightmost deletions only deletes
letters of α, only by drop-left steps, each strictly left of the previous one.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..core.rewrite import StepKind, normalize_traced
from ..core.words import Content, Word, is_canonical
from .structure import idempotent
from .table import SemigroupTable, enumerate_semigroup

logger = logging.getLogger("kiselman.semigroup")

MODES = ("prop15", "prop16")


@dataclass
class DeletionResult:
    mode: str
    exhaustive: bool
    instances: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    locality_checked: int = 0
    locality_violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.locality_violations


def words_avoiding_one(table: SemigroupTable) -> List[Word]:
    """Canonical words of the elements whose content avoids the letter 1."""
    return [w for w in table.elements if 1 not in w.letters]


def trace_is_local(alpha: Word, beta: Word) -> bool:
    """
    Locality of the rightmost-deletion normalisation of ``alpha + beta``.

    Requires ``alpha·a_1·beta`` to be canonical.
    """
    trace = normalize_traced(alpha + beta, strategy="rightmost")
    if any(step.kind is not StepKind.DROP_LEFT for step in trace.steps):
        return False
    if any(origin >= len(alpha) for origin in trace.origins):
        return False
    return all(b < a for a, b in zip(trace.origins, trace.origins[1:]))


def _check_separation(table: SemigroupTable, words: List[Word], f: Word, result: DeletionResult) -> None:
    a1 = Word((1,), table.rank)
    seen: Dict[int, Word] = {}
    for v in words:
        x = table.element_of(v + a1 + f)
        result.instances += 1
        if x in seen:
            result.counterexamples.append({"v": str(seen[x]), "w": str(v)})
        else:
            seen[x] = v


def _check_cancellation_instance(
    table: SemigroupTable,
    w: Word,
    u: Word,
    v: Word,
    f: Word,
    result: DeletionResult
) -> None:
    a1 = Word((1,), table.rank)
    result.instances += 1

    pairs = (
        ("wv != wu", w + v, w + u),
        ("wva1 != wua1", w + v + a1, w + u + a1),
        ("wva1f != wua1f", w + v + a1 + f, w + u + a1 + f),
    )
    for name, left, right in pairs:
        if table.element_of(left) == table.element_of(right):
            result.counterexamples.append({"claim": name, "w": str(w), "u": str(u), "v": str(v)})

    for beta in (u, v):
        result.locality_checked += 1
        if not trace_is_local(w, beta):
            result.locality_violations.append({"alpha": str(w), "beta": str(beta)})


def _valid_cancellation(w: Word, u: Word, v: Word) -> bool:
    a1 = Word((1,), w.rank)
    return u != v and is_canonical(w + a1 + u) and is_canonical(w + a1 + v)


def deletion_property_report(
    table: SemigroupTable,
    mode: str,
    budget: int = 10_000,
    seed: Optional[int] = None
) -> DeletionResult:
    """
    Run one deletion check on an enumerated table.

    Exhaustive when the candidate count is within ``budget``; otherwise
    ``budget`` valid instances are drawn with ``random.Random(seed)``.

    :raises ValueError: on ``n < 2`` or an unknown mode
    """
    if table.rank < 2:
        raise ValueError("Deletion properties need n >= 2")
    if mode not in MODES:
        raise ValueError(f"Unknown mode '{mode}'. Use one of {MODES}")

    n = table.rank
    words = words_avoiding_one(table)
    f = idempotent(Content.from_letters(range(2, n + 1), n))

    if mode == "prop15":
        # one pass over |K_{n-1}| words is always affordable
        result = DeletionResult(mode, exhaustive=True)
        _check_separation(table, words, f, result)
        return result

    total = len(words) ** 3
    if total <= budget:
        result = DeletionResult(mode, exhaustive=True)
        for w in words:
            for u in words:
                for v in words:
                    if _valid_cancellation(w, u, v):
                        _check_cancellation_instance(table, w, u, v, f, result)
    else:
        result = DeletionResult(mode, exhaustive=False)
        rng = random.Random(seed)
        attempts = 0
        max_attempts = 50 * budget
        while result.instances < budget and attempts < max_attempts:
            attempts += 1
            w, u, v = rng.choice(words), rng.choice(words), rng.choice(words)
            if _valid_cancellation(w, u, v):
                _check_cancellation_instance(table, w, u, v, f, result)
        if result.instances < budget:
            logger.warning(
                "only %d of %d cancellation samples were valid after %d attempts",
                result.instances, budget, attempts
            )

    logger.info(
        "%s on K_%d: %d instances, %d counterexamples",
        mode, n, result.instances, len(result.counterexamples)
    )
    return result


def deletion_property_check(
    n: int,
    mode: str,
    budget: int = 10_000,
    seed: Optional[int] = None
) -> bool:
    """
    Verify a deletion property on Kₙ.

    :param n: rank, at least 2
    :type n: int
    :param mode: ``"prop15"`` or ``"prop16"``
    :type mode: str
    :param budget: exhaustive up to this many candidates, else this many samples
    :type budget: int
    :param seed: sampling seed
    :type seed: int or None
    :return: True iff no counterexample (and no locality violation) was found
    :rtype: bool
    """
    if n < 2:
        raise ValueError("Deletion properties need n >= 2")
    return deletion_property_report(enumerate_semigroup(n), mode, budget, seed).passed


def locality_sample(table: SemigroupTable, count: int, seed: Optional[int] = None) -> Tuple[int, List[Dict[str, Any]]]:
    """Check trace locality on ``count`` random pairs (α, β) with α·a_1·β canonical."""
    words = words_avoiding_one(table)
    a1 = Word((1,), table.rank)
    rng = random.Random(seed)
    checked, violations = 0, []
    for _ in range(50 * count):
        if checked >= count:
            break
        alpha, beta = rng.choice(words), rng.choice(words)
        if not is_canonical(alpha + a1 + beta):
            continue
        checked += 1
        if not trace_is_local(alpha, beta):
            violations.append({"alpha": str(alpha), "beta": str(beta)})
    return checked, violations
