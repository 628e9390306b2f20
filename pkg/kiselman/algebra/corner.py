"""
Corner algebras f·ℚKₙ·g and the size recursion
모서리 대수 차원과 |Kₙ| 점화식

With e = aₙ + (e - aₙ) split into two orthogonal idempotents, ℚKₙ is the
direct sum of four corners. Two of them are copies of ℚK_{n-1}, one vanishes,
and the last one accounts for the rest:

    |Kₙ| = 2·|K_{n-1}| + dim (e - aₙ)·ℚKₙ·aₙ
"""

import logging
from typing import Dict, Optional

from ..core.errors import NotIdempotentError
from ..core.linalg import exact_rank
from ..semigroup.table import enumerate_semigroup
from .element import AlgebraElement, SemigroupAlgebra

logger = logging.getLogger("kiselman.algebra")

CORNERS = ("a_n,a_n", "a_n,e-a_n", "e-a_n,a_n", "e-a_n,e-a_n")


def corner_dimension(left: AlgebraElement, right: AlgebraElement) -> int:
    """
    Dimension of the span of ``left·x·right`` over all x in Kₙ.

    :param left: idempotent of ℚKₙ
    :type left: AlgebraElement
    :param right: idempotent of the same algebra
    :type right: AlgebraElement
    :return: exact rank of the coefficient matrix
    :rtype: int
    :raises NotIdempotentError: if either argument is not idempotent
    :raises RankMismatchError: if the arguments come from different algebras

    Example:
        >>> A = SemigroupAlgebra(enumerate_semigroup(3))
        >>> a3 = A.generator(3)
        >>> corner_dimension(A.one() - a3, a3)
        8
    """
    for name, f in (("left", left), ("right", right)):
        if f * f != f:
            raise NotIdempotentError(f"The {name} factor is not idempotent: {f}")
    algebra = left.algebra
    left._check(right)
    rows = [
        (left * algebra.basis(x) * right).coeffs
        for x in range(algebra.dimension)
    ]
    return exact_rank(rows, algebra.dimension)


def _previous_size(n: int, element_cap: Optional[int]) -> int:
    # K_0 is the trivial monoid {e}
    if n == 1:
        return 1
    return enumerate_semigroup(n - 1, element_cap=element_cap).size


def corner_dimensions(algebra: SemigroupAlgebra, element_cap: Optional[int] = None) -> Dict[str, object]:
    """
    The four corners for the idempotents aₙ and e - aₙ, with |K_{n-1}| and |Kₙ|.

    :return: ``{"n", "size", "previous_size", "corners": {name: dim}}``

    Example:
        >>> corner_dimensions(SemigroupAlgebra(enumerate_semigroup(2)))["corners"]
        {'a_n,a_n': 2, 'a_n,e-a_n': 0, 'e-a_n,a_n': 1, 'e-a_n,e-a_n': 2}
    """
    n = algebra.rank
    a_n = algebra.generator(n)
    b_n = algebra.one() - a_n
    factors = {"a_n": a_n, "e-a_n": b_n}

    corners = {}
    for name in CORNERS:
        left, right = name.split(",")
        corners[name] = corner_dimension(factors[left], factors[right])
        logger.debug("K_%d corner %s: %d", n, name, corners[name])
    return {
        "n": n,
        "size": algebra.dimension,
        "previous_size": _previous_size(n, element_cap),
        "corners": corners,
    }


def size_recursion_check(n: int, element_cap: Optional[int] = None) -> bool:
    """
    |Kₙ| = 2·|K_{n-1}| + dim (e - aₙ)·ℚKₙ·aₙ with every quantity computed exactly.

    :raises ValueError: if ``n < 2``
    :raises ResourceLimitError: if Kₙ does not fit ``element_cap``
    """
    if n < 2:
        raise ValueError(f"The size recursion needs n >= 2, got {n}")
    algebra = SemigroupAlgebra(enumerate_semigroup(n, element_cap=element_cap))
    a_n = algebra.generator(n)
    corner = corner_dimension(algebra.one() - a_n, a_n)
    previous = _previous_size(n, element_cap)
    ok = algebra.dimension == 2 * previous + corner
    logger.info("K_%d: %d = 2*%d + %d -> %s", n, algebra.dimension, previous, corner, ok)
    return ok
