"""
Primitive idempotents of ℚKₙ
ℚKₙ 의 원시 멱등원 체계

e_X⁽ⁿ⁾ = a_{i₁}⋯a_{i_s}(e - a_{j₁})⋯(e - a_{j_t}) with X = {i₁ > … > i_s} and
its complement {j₁ < … < j_t}. The 2ⁿ elements are orthogonal idempotents
summing to e, and ρ_Y(e_X⁽ⁿ⁾) is 1 exactly when Y = X.
"""

import logging
from typing import List, Optional

import numpy as np

from ..core.errors import LetterOutOfRangeError
from ..core.words import Content, Word, all_contents
from ..semigroup.structure import idempotent
from .element import AlgebraElement, SemigroupAlgebra, linear_psi, rho_on_algebra

logger = logging.getLogger("kiselman.algebra")


def primitive_idempotent(
    algebra: SemigroupAlgebra,
    X: Content,
    universe: Optional[int] = None
) -> AlgebraElement:
    """
    e_X⁽ᵐ⁾ expanded in the canonical-word basis of ℚKₙ.

    :param algebra: ℚKₙ
    :type algebra: SemigroupAlgebra
    :param X: subset of ``{1..m}``, given with rank n
    :type X: Content
    :param universe: m ≤ n, the letters the complement is taken in (default n)
    :type universe: Optional[int]
    :return: the expanded product
    :rtype: AlgebraElement
    :raises LetterOutOfRangeError: if ``X`` has a letter above ``universe``

    Example:
        >>> A = SemigroupAlgebra(enumerate_semigroup(2))
        >>> str(primitive_idempotent(A, Content.from_letters([2], 2)))
        '1/1*[2] + -1/1*[2,1]'
    """
    n = algebra.rank
    m = n if universe is None else universe
    if not 0 <= m <= n:
        raise LetterOutOfRangeError(f"Universe {m} is outside 0..{n}")
    if any(i > m for i in X.letters):
        raise LetterOutOfRangeError(f"Content {X} is not inside 1..{m}")

    result = algebra.word(idempotent(X))
    one = algebra.one()
    for j in range(1, m + 1):
        if j not in X:
            result = result * (one - algebra.generator(j))
    return result


def primitive_idempotents(algebra: SemigroupAlgebra) -> List[AlgebraElement]:
    """All e_X⁽ⁿ⁾ in bitmask order of X."""
    return [primitive_idempotent(algebra, X) for X in all_contents(algebra.rank)]


def idempotent_system_check(algebra: SemigroupAlgebra) -> List[str]:
    """
    Idempotency, pairwise orthogonality, Σ_X e_X⁽ⁿ⁾ = e and ρ_Y(e_X⁽ⁿ⁾) = δ_{XY}.

    :return: descriptions of violations, empty when the system is complete
    """
    contents = all_contents(algebra.rank)
    system = primitive_idempotents(algebra)
    violations = []

    total = algebra.zero()
    for X, eX in zip(contents, system):
        total = total + eX
        if eX * eX != eX:
            violations.append(f"e_{X} is not idempotent")
        for Y, eY in zip(contents, system):
            if X != Y and not (eX * eY).is_zero():
                violations.append(f"e_{X} e_{Y} != 0")
            expected = 1 if X == Y else 0
            if rho_on_algebra(Y, eX) != expected:
                violations.append(f"rho_{Y}(e_{X}) != {expected}")
    if total != algebra.one():
        violations.append("sum of primitive idempotents != e")
    return violations


def primitive_idempotent_recursion_check(algebra: SemigroupAlgebra) -> List[str]:
    """
    e_X⁽ⁿ⁾ = aₙ·e_{X∖{n}}⁽ⁿ⁻¹⁾ if n ∈ X, and e_X⁽ⁿ⁻¹⁾·(e - aₙ) otherwise.

    The rank n-1 idempotents are read inside Kₙ. Empty result for n = 1.
    """
    n = algebra.rank
    if n < 2:
        return []
    top = Content.from_letters([n], n)
    a_n = algebra.generator(n)
    violations = []
    for X in all_contents(n):
        if n in X:
            expected = a_n * primitive_idempotent(algebra, X - top, universe=n - 1)
        else:
            expected = primitive_idempotent(algebra, X, universe=n - 1) * (algebra.one() - a_n)
        if primitive_idempotent(algebra, X) != expected:
            violations.append(f"recursion fails for X = {X}")
    return violations


# =============================================================================
# Projections πᵢ
# =============================================================================

def _top_idempotent(algebra: SemigroupAlgebra, low: int) -> AlgebraElement:
    """e_{low..n}; e itself when ``low > n``."""
    n = algebra.rank
    return algebra.word(Word(tuple(range(n, low - 1, -1)), n))


def kiselman_projection(algebra: SemigroupAlgebra, i: int) -> AlgebraElement:
    """
    πᵢ = e_{n-i+2..n} - e_{n-i+1..n} for i < n, and πₙ = e_{2..n}.

    ψₙ(πᵢ) is the diagonal matrix unit Dᵢ.

    :raises LetterOutOfRangeError: if ``i`` is outside ``1..n``

    Example:
        >>> A = SemigroupAlgebra(enumerate_semigroup(2))
        >>> str(kiselman_projection(A, 1))
        '1/1*[e] + -1/1*[2]'
    """
    n = algebra.rank
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
        raise LetterOutOfRangeError(f"Projection index {i!r} is outside 1..{n}")
    if i == n:
        return _top_idempotent(algebra, 2)
    return _top_idempotent(algebra, n - i + 2) - _top_idempotent(algebra, n - i + 1)


def projection_check(algebra: SemigroupAlgebra) -> List[str]:
    """ψₙ(πᵢ) = Dᵢ for every i, and Σᵢ πᵢ = e."""
    n = algebra.rank
    violations = []
    total = algebra.zero()
    for i in range(1, n + 1):
        pi = kiselman_projection(algebra, i)
        total = total + pi
        D = np.zeros((n, n), dtype=np.int64)
        D[i - 1, i - 1] = 1
        if not all(v == d for v, d in zip(linear_psi(pi).flat, D.flat)):
            violations.append(f"psi(pi_{i}) != D_{i}")
    if total != algebra.one():
        violations.append("sum of projections != e")
    return violations
