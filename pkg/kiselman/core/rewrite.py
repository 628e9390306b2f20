"""
Reduction relation and normal forms
축약(rewriting) 규칙과 정규형 계산

A factor ``i u i`` with ``i`` absent from ``u`` reduces by
- drop-right (``i u i -> i u``) when every letter of ``u`` is smaller than ``i``,
- drop-left  (``i u i -> u i``) when every letter of ``u`` is larger than ``i``.
An empty ``u`` admits both. Every step shortens the word by one letter and the
system is confluent, so every maximal reduction ends in the same canonical word.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

from .errors import StepNotApplicableError
from .words import Word, is_canonical

logger = logging.getLogger("kiselman.rewrite")


class StepKind(Enum):
    DROP_RIGHT = "drop-right"
    DROP_LEFT = "drop-left"


@dataclass(frozen=True)
class ReductionStep:
    """
    One application of the reduction relation.

    ``start`` and ``end`` are the positions of the two matched occurrences of
    ``letter`` in the word the step applies to.
    """

    start: int
    end: int
    letter: int
    kind: StepKind

    @property
    def deleted_index(self) -> int:
        return self.end if self.kind is StepKind.DROP_RIGHT else self.start


@dataclass(frozen=True)
class ReductionTrace:
    """
    Normalisation log.

    ``origins[k]`` is the position, in ``initial``, of the letter removed by ``steps[k]``.
    """

    initial: Word
    steps: Tuple[ReductionStep, ...]
    origins: Tuple[int, ...]
    result: Word

    def replay(self) -> Word:
        w = self.initial
        for step in self.steps:
            w = apply_step(w, step)
        return w


STRATEGIES = ("leftmost", "rightmost")


def _kinds_for_gap(letter: int, gap: Tuple[int, ...]) -> List[StepKind]:
    if not gap:
        return [StepKind.DROP_RIGHT, StepKind.DROP_LEFT]
    if all(j < letter for j in gap):
        return [StepKind.DROP_RIGHT]
    if all(j > letter for j in gap):
        return [StepKind.DROP_LEFT]
    return []


def applicable_steps(w: Word) -> List[ReductionStep]:
    """
    Every reduction step applicable to ``w``.

    Steps are ordered by the start of the matched factor; at equal start the
    drop-right step comes first. The list is empty iff ``w`` is canonical.

    :param w: any word
    :type w: Word
    :return: applicable steps in left-to-right match order
    :rtype: List[ReductionStep]

    Example:
        >>> [s.kind.value for s in applicable_steps(Word((1, 1), 1))]
        ['drop-right', 'drop-left']
    """
    steps = []
    last = {}
    letters = w.letters
    for pos, i in enumerate(letters):
        if i in last:
            start = last[i]
            for kind in _kinds_for_gap(i, letters[start + 1:pos]):
                steps.append(ReductionStep(start, pos, i, kind))
        last[i] = pos

    # kinds are listed drop-right first, and sort is stable
    steps.sort(key=lambda s: s.start)
    return steps


def is_irreducible(w: Word) -> bool:
    return not applicable_steps(w)


def apply_step(w: Word, s: ReductionStep) -> Word:
    """
    Apply one reduction step.

    :raises StepNotApplicableError: if ``s`` does not match ``w``
    """
    letters = w.letters
    if not (0 <= s.start < s.end < len(letters)):
        raise StepNotApplicableError(f"Step positions {s.start}..{s.end} outside word '{w}'")
    if letters[s.start] != s.letter or letters[s.end] != s.letter:
        raise StepNotApplicableError(
            f"Step on letter {s.letter} does not match '{w}' at {s.start}..{s.end}"
        )
    gap = letters[s.start + 1:s.end]
    if s.letter in gap or s.kind not in _kinds_for_gap(s.letter, gap):
        raise StepNotApplicableError(
            f"{s.kind.value} on letter {s.letter} is not applicable to '{w}' at {s.start}..{s.end}"
        )

    k = s.deleted_index
    return Word(letters[:k] + letters[k + 1:], w.rank)


def _choose(steps: List[ReductionStep], strategy: str) -> ReductionStep:
    if strategy == "leftmost":
        return steps[0]
    # rightmost deletion; drop-left first when two steps delete the same letter
    return max(steps, key=lambda s: (s.deleted_index, s.kind is StepKind.DROP_LEFT))


def normalize_traced(w: Word, strategy: str = "leftmost") -> ReductionTrace:
    """
    Normalise ``w`` and record every step.

    :param w: any word
    :type w: Word
    :param strategy: ``"leftmost"`` takes the first applicable step (drop-right
        preferred); ``"rightmost"`` takes the step deleting the rightmost letter
    :type strategy: str
    :return: trace whose ``result`` is the canonical form of ``w``
    :rtype: ReductionTrace
    :raises ValueError: on an unknown strategy
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"Unknown strategy '{strategy}'. Use one of {STRATEGIES}")

    current = w
    positions = list(range(len(w)))
    steps = []
    origins = []

    while True:
        candidates = applicable_steps(current)
        if not candidates:
            break
        step = _choose(candidates, strategy)
        origins.append(positions.pop(step.deleted_index))
        steps.append(step)
        current = apply_step(current, step)

    logger.debug("normalized '%s' -> '%s' in %d steps", w, current, len(steps))
    return ReductionTrace(w, tuple(steps), tuple(origins), current)


def normalize(w: Word) -> Word:
    """Canonical form of ``w``."""
    current = w
    while True:
        steps = applicable_steps(current)
        if not steps:
            return current
        current = apply_step(current, steps[0])


def confluence_check(w: Word, trials: int, seed: Optional[int] = None) -> bool:
    """
    Randomised confluence test.

    Runs ``trials`` normalisations that pick a uniformly random applicable step
    each time, using ``random.Random(seed)``.

    :return: True iff every run ends in :func:`normalize` ``(w)`` and that word is canonical
    :raises ValueError: if ``trials < 1``
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")

    rng = random.Random(seed)
    expected = normalize(w)
    if not is_canonical(expected):
        return False

    for _ in range(trials):
        current = w
        steps = applicable_steps(current)
        while steps:
            current = apply_step(current, rng.choice(steps))
            steps = applicable_steps(current)
        if current != expected:
            logger.warning("confluence failure on '%s': '%s' vs '%s'", w, current, expected)
            return False
    return True


def reachable_normal_forms(w: Word) -> FrozenSet[Word]:
    """
    Irreducible words reachable from ``w`` over all reduction orders.

    Exhaustive (memoised per intermediate word); a singleton for every input.
    Intended for short words.
    """
    n = w.rank

    @lru_cache(maxsize=None)
    def search(letters: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
        word = Word(letters, n)
        steps = applicable_steps(word)
        if not steps:
            return frozenset([letters])
        found = set()
        for step in steps:
            found |= search(apply_step(word, step).letters)
        return frozenset(found)

    return frozenset(Word(letters, n) for letters in search(w.letters))
