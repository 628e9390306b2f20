"""
Structure of Kₙ: idempotents, nilpotent subsemigroups, Green's relations, symmetries
Kₙ 구조 분석 모듈

Functions taking a :class:`SemigroupTable` work on element indices and use the
product table; functions taking words work for any rank without enumeration.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..core.errors import NotIdempotentError
from ..core.rewrite import normalize
from ..core.words import Content, Word, all_contents, check_rank
from .table import SemigroupTable, multiply

logger = logging.getLogger("kiselman.semigroup")

GREEN_RELATIONS = ("L", "R", "H", "D", "J")


# =============================================================================
# Idempotents
# =============================================================================

def idempotent(X: Content) -> Word:
    """
    e_X: the generators of ``X`` multiplied in decreasing order; e_∅ = e.

    Example:
        >>> str(idempotent(Content.from_letters([1, 3], 3)))
        '3,1'
    """
    return Word(tuple(reversed(X.letters)), X.rank)


def idempotents(n: int) -> List[Word]:
    """The 2ⁿ idempotents e_X, in bitmask order of ``X``."""
    return [idempotent(X) for X in all_contents(check_rank(n))]


def is_idempotent(x: Word) -> bool:
    return multiply(x, x) == normalize(x)


def idempotent_indices(table: SemigroupTable) -> List[int]:
    """Brute-force scan of the table for ``x·x = x``."""
    diag = table.product[np.arange(table.size), np.arange(table.size)]
    return [int(x) for x in np.nonzero(diag == np.arange(table.size))[0]]


def power_to_idempotent(w: Word) -> Tuple[int, Word]:
    """
    Least ``k ≥ 1`` with ``w^k`` idempotent, and that idempotent.

    The idempotent is e_{content(w)} and ``k ≤ max(1, |content(w)|)``.
    """
    x = normalize(w)
    power, k = x, 1
    while not is_idempotent(power):
        power = multiply(power, x)
        k += 1
    return k, power


def idempotent_product(X: Content, Y: Content) -> Tuple[bool, Word]:
    """
    The product e_X·e_Y and whether it is idempotent.

    The product is idempotent, and then equal to e_{X∪Y}, iff every letter of
    X∖Y exceeds every letter of Y∖X.

    :return: ``(criterion holds, canonical word of e_X·e_Y)``
    """
    value = multiply(idempotent(X), idempotent(Y))
    holds = all(i > j for i in (X - Y) for j in (Y - X))
    return holds, value


def natural_leq(f1: Word, f2: Word) -> bool:
    """
    Natural partial order on idempotents: ``f1 ≤ f2`` iff ``f1 f2 = f2 f1 = f1``.

    Equivalent to ``content(f2) ⊆ content(f1)``.

    :raises NotIdempotentError: if either argument is not idempotent
    """
    for f in (f1, f2):
        if not is_idempotent(f):
            raise NotIdempotentError(f"'{f}' is not an idempotent")
    f1 = normalize(f1)
    return multiply(f1, f2) == f1 and multiply(f2, f1) == f1


def idempotents_commute(table: SemigroupTable) -> bool:
    """True iff all idempotents commute (false as soon as n ≥ 2)."""
    E = np.array(idempotent_indices(table))
    block = table.product[np.ix_(E, E)]
    return bool(np.array_equal(block, block.T))


# =============================================================================
# Nilpotent subsemigroups
# =============================================================================

@dataclass(frozen=True)
class NilpotentSubsemigroup:
    """Nil(X): the elements of content exactly X, with zero e_X."""

    content: Content
    members: Tuple[Word, ...]
    zero: Word
    nilpotency_class: int


def _content_block(table: SemigroupTable, X: Content) -> np.ndarray:
    return np.nonzero(table.contents == X.bits)[0]


def nilpotent_subsemigroup(table: SemigroupTable, X: Content) -> NilpotentSubsemigroup:
    """
    Nil(X) with its nilpotency class, computed from iterated set products.

    The class is the least ``k`` with Nil(X)^k = {e_X}; it equals ``|X|``
    (and 1 for X = ∅).
    """
    members = _content_block(table, X)
    zero = table.element_of(idempotent(X))

    power = np.unique(members)
    k = 1
    while not (power.size == 1 and power[0] == zero):
        power = np.unique(table.product[np.ix_(power, members)])
        k += 1
        if k > table.rank + 1:
            logger.error("Nil(%s) did not collapse to its zero", X)
            break

    return NilpotentSubsemigroup(
        content=X,
        members=tuple(table.word(int(x)) for x in members),
        zero=table.word(zero),
        nilpotency_class=k,
    )


def nilpotent_partition(table: SemigroupTable) -> Dict[Content, List[Word]]:
    """Kₙ split by content; the blocks are exactly the Nil(X)."""
    return {
        X: [table.word(int(x)) for x in _content_block(table, X)]
        for X in all_contents(table.rank)
    }


# =============================================================================
# Green's relations
# =============================================================================

@dataclass(frozen=True)
class GreenClasses:
    relation: str
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def _blocks_from_labels(labels: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    groups: Dict[int, List[int]] = {}
    for x, label in enumerate(labels.tolist()):
        groups.setdefault(label, []).append(x)
    return tuple(sorted(tuple(g) for g in groups.values()))


def _row_labels(masks: np.ndarray) -> np.ndarray:
    _, labels = np.unique(masks, axis=0, return_inverse=True)
    return labels.reshape(-1)


def _ideal_masks(table: SemigroupTable) -> Tuple[np.ndarray, np.ndarray]:
    """Boolean masks of xS¹ (rows of R) and S¹x (rows of L)."""
    P = table.product
    size = table.size
    rows = np.arange(size)[:, None]
    right_ideals = np.zeros((size, size), dtype=bool)
    right_ideals[rows, P] = True
    left_ideals = np.zeros((size, size), dtype=bool)
    left_ideals[rows, P.T] = True
    return right_ideals, left_ideals


def green_classes(table: SemigroupTable, which: str) -> GreenClasses:
    """
    Classes of one of Green's relations, from principal ideals.

    :param table: enumerated Kₙ
    :type table: SemigroupTable
    :param which: ``"L"``, ``"R"``, ``"H"``, ``"D"`` or ``"J"``
    :type which: str
    :return: partition of element indices
    :rtype: GreenClasses
    :raises ValueError: on an unknown relation tag
    """
    which = which.upper()
    if which not in GREEN_RELATIONS:
        raise ValueError(f"Unknown Green relation '{which}'. Use one of {GREEN_RELATIONS}")

    right_ideals, left_ideals = _ideal_masks(table)

    if which == "R":
        labels = _row_labels(right_ideals)
    elif which == "L":
        labels = _row_labels(left_ideals)
    elif which == "H":
        pairs = np.stack([_row_labels(right_ideals), _row_labels(left_ideals)], axis=1)
        labels = _row_labels(pairs)
    else:
        # S¹xS¹ is the union of uS¹ over u in S¹x; D = J in a finite semigroup
        counts = left_ideals.astype(np.float64) @ right_ideals.astype(np.float64)
        labels = _row_labels(counts > 0)

    return GreenClasses(which, _blocks_from_labels(labels))


def maximal_subgroups_trivial(table: SemigroupTable) -> bool:
    """
    True iff the group of units of every local monoid fSf is {f}.

    For each idempotent f the candidates are x with xf = fx = x; the units are
    the candidates with a two-sided inverse relative to f.
    """
    P = table.product
    everything = np.arange(table.size)
    for f in idempotent_indices(table):
        candidates = np.nonzero((P[:, f] == everything) & (P[f, :] == everything))[0]
        sub = P[np.ix_(candidates, candidates)]
        invertible = ((sub == f) & (sub.T == f)).any(axis=1)
        units = candidates[invertible]
        if units.tolist() != [f]:
            logger.info("non-trivial subgroup at idempotent %s", table.word(f))
            return False
    return True


# =============================================================================
# Automorphisms and anti-automorphisms
# =============================================================================

def _letter_map(table: SemigroupTable, sigma: Sequence[int], reverse: bool) -> np.ndarray:
    n = table.rank
    phi = np.empty(table.size, dtype=np.int64)
    for x, w in enumerate(table.elements):
        letters = [sigma[i - 1] for i in w.letters]
        if reverse:
            letters.reverse()
        phi[x] = table.element_of(Word(tuple(letters), n))
    return phi


def _generator_permutations(table: SemigroupTable, reverse: bool) -> List[Tuple[int, ...]]:
    P = table.product
    found = []
    for sigma in itertools.permutations(range(1, table.rank + 1)):
        phi = _letter_map(table, sigma, reverse)
        image = P[np.ix_(phi, phi)]
        if reverse:
            image = image.T
        if np.array_equal(phi[P], image) and np.unique(phi).size == table.size:
            found.append(sigma)
    return found


def automorphisms(table: SemigroupTable) -> List[Tuple[int, ...]]:
    """
    Generator permutations that extend to automorphisms (brute force).

    ``sigma[i-1]`` is the image of letter ``i``. Only the identity survives.
    """
    return _generator_permutations(table, reverse=False)


def antiautomorphisms(table: SemigroupTable) -> List[Tuple[int, ...]]:
    """Generator permutations that extend to anti-automorphisms; only i ↦ n+1-i survives."""
    return _generator_permutations(table, reverse=True)


def antiautomorphism_tau(x: Word) -> Word:
    """
    τ: reverse the word and replace each letter i by n+1-i, then normalise.

    Example:
        >>> str(antiautomorphism_tau(Word((1, 2), 2)))
        '1,2'
    """
    n = x.rank
    return normalize(Word(tuple(n + 1 - i for i in reversed(x.letters)), n))


def shifted_subsemigroup_size(table: SemigroupTable) -> int:
    """Number of elements avoiding the letter 1; the submonoid they form is a copy of K_{n-1}."""
    return int(np.count_nonzero((table.contents & 1) == 0))


def content_is_homomorphism(table: SemigroupTable) -> bool:
    """content(xy) = content(x) ∪ content(y) over the whole table."""
    c = table.contents
    return bool(np.array_equal(c[table.product], c[:, None] | c[None, :]))
