"""
Isolated subsemigroups
고립(isolated) 부분반군 모듈

Isolated subsemigroups of Kₙ are exactly the content preimages of
union-closed families of subsets of {1..n}. The brute-force predicates here
check that on enumerated tables.
"""

import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence

import numpy as np

from ..core.errors import NotUnionClosedError, ResourceLimitError
from ..core.words import Content, Word, all_contents, check_rank
from .table import SemigroupTable

logger = logging.getLogger("kiselman.semigroup")

Family = FrozenSet[Content]

# 2^(2^n) candidate families; n = 4 already means 65536
MAX_FAMILY_RANK = 4


def is_union_closed(T: Iterable[Content]) -> bool:
    members = set(T)
    return all((A | B) in members for A in members for B in members)


def union_closed_families(n: int) -> List[Family]:
    """
    All nonempty union-closed families of subsets of ``{1..n}``.

    :param n: rank, at most 4
    :type n: int
    :return: families ordered by their bitmask encoding
    :rtype: List[FrozenSet[Content]]
    :raises ResourceLimitError: for ``n > 4``
    """
    check_rank(n)
    if n > MAX_FAMILY_RANK:
        raise ResourceLimitError(
            f"union_closed_families is limited to n <= {MAX_FAMILY_RANK}, got {n}"
        )

    contents = all_contents(n)
    k = len(contents)
    families = []
    for mask in range(1, 1 << k):
        members = [a for a in range(k) if mask >> a & 1]
        # contents are indexed by their bits, so a | b indexes the union
        if all(mask >> (a | b) & 1 for a in members for b in members):
            families.append(frozenset(contents[a] for a in members))
    return families


def _family_rank(T: Sequence[Content], n: Optional[int]) -> int:
    if n is not None:
        return check_rank(n)
    if not T:
        raise NotUnionClosedError("An empty family needs an explicit rank")
    return T[0].rank


def _require_union_closed(T: Iterable[Content]) -> List[Content]:
    members = list(T)
    if not members:
        raise NotUnionClosedError("Family of contents must be nonempty")
    if not is_union_closed(members):
        raise NotUnionClosedError(
            "Family {" + ", ".join(str(X) for X in members) + "} is not closed under union"
        )
    return members


def preimage_indices(table: SemigroupTable, T: Iterable[Content]) -> np.ndarray:
    """Indices of elements whose content lies in ``T``, ascending."""
    members = _require_union_closed(T)
    bits = np.array([X.bits for X in members], dtype=np.int64)
    return np.nonzero(np.isin(table.contents, bits))[0]


def isolated_preimage(table: SemigroupTable, T: Iterable[Content]) -> List[Word]:
    """
    content⁻¹(T), the union of Nil(X) over X in ``T``.

    :raises NotUnionClosedError: if ``T`` is empty or not closed under union
    """
    return [table.word(int(x)) for x in preimage_indices(table, T)]


def completely_isolated_check(T: Iterable[Content], n: Optional[int] = None) -> bool:
    """
    True iff A ∪ B ∈ T forces A ∈ T or B ∈ T, for all subsets A, B.

    This is the criterion for content⁻¹(T) to be completely isolated.

    :raises NotUnionClosedError: if ``T`` is empty or not closed under union
    """
    members = set(_require_union_closed(T))
    contents = all_contents(_family_rank(list(members), n))
    for A in contents:
        for B in contents:
            if (A | B) in members and A not in members and B not in members:
                return False
    return True


# =============================================================================
# Brute-force predicates on element sets
# =============================================================================

def _mask(table: SemigroupTable, S: Iterable[int]) -> np.ndarray:
    inside = np.zeros(table.size, dtype=bool)
    inside[np.fromiter((int(x) for x in S), dtype=np.int64)] = True
    return inside


def is_subsemigroup(table: SemigroupTable, S: Iterable[int]) -> bool:
    inside = _mask(table, S)
    idx = np.nonzero(inside)[0]
    return bool(inside[table.product[np.ix_(idx, idx)]].all())


def is_isolated(table: SemigroupTable, S: Iterable[int]) -> bool:
    """x^l ∈ S for some l ≥ 1 implies x ∈ S."""
    inside = _mask(table, S)
    for x in np.nonzero(~inside)[0]:
        x = int(x)
        power = x
        # powers stabilise at e_content(x) after at most n steps
        for _ in range(table.rank + 1):
            if inside[power]:
                return False
            power = table.multiply(power, x)
    return True


def is_completely_isolated(table: SemigroupTable, S: Iterable[int]) -> bool:
    """xy ∈ S implies x ∈ S or y ∈ S."""
    inside = _mask(table, S)
    outside = ~inside
    bad = inside[table.product] & outside[:, None] & outside[None, :]
    return not bool(bad.any())


def minimal_isolated_subsemigroups(table: SemigroupTable) -> List[List[Word]]:
    """
    Inclusion-minimal isolated subsemigroups among the content preimages.

    Every preimage is checked by brute force before comparison; the result
    coincides with the blocks Nil(X).
    """
    candidates = []
    for T in union_closed_families(table.rank):
        idx = preimage_indices(table, T)
        if idx.size and is_subsemigroup(table, idx) and is_isolated(table, idx):
            candidates.append(frozenset(int(x) for x in idx))

    minimal = [S for S in candidates if not any(other < S for other in candidates)]
    minimal = sorted(set(minimal), key=lambda S: sorted(S))
    return [[table.word(x) for x in sorted(S)] for S in minimal]
