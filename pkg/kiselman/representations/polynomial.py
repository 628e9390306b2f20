"""
Parametric representation κₙ and its integer evaluation κ′ₙ
다항식 행렬 표현 κₙ 및 정수 특수화 κ′ₙ

κₙ sends a_i to the matrix of ψₙ with every 1 above the diagonal of column
k = n-i+1 replaced by the variable ξ_{r,k}. Polynomials live in the sparse ring
``sympy.polys.rings.ring`` over ZZ with graded-lexicographic order. κ′ₙ
substitutes ξ_{r,k} = m_k^r.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from ..core.words import Word, check_rank
from ..semigroup.table import SemigroupTable
from .matrices import IntMatrix, MatrixRepresentation, generator_column, int_identity

logger = logging.getLogger("kiselman.repr")


# =============================================================================
# Polynomial ring and matrices
# =============================================================================

@dataclass(frozen=True)
class XiRing:
    """ℤ[ξ_{i,j} : 1 ≤ i < j ≤ n] with the variable index of each pair."""

    n: int
    ring: Any
    pairs: Tuple[Tuple[int, int], ...]

    def gen(self, i: int, j: int):
        return self.ring.gens[self.pairs.index((i, j))]


@lru_cache(maxsize=None)
def xi_ring(n: int) -> XiRing:
    check_rank(n)
    pairs = tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    # n = 1 has no ξ; one placeholder generator keeps the ring well formed
    names = ",".join(f"xi_{i}_{j}" for i, j in pairs) or "xi_unused"
    R = ring(names, ZZ, grlex)[0]
    return XiRing(n, R, pairs)


class PolyMatrix:
    """Square matrix of polynomials in the ξ variables of one rank, backed by a ``DomainMatrix``."""

    def __init__(self, xi: XiRing, rows: Sequence[Sequence[Any]]):
        self.xi = xi
        self.rows = tuple(tuple(xi.ring(v) for v in row) for row in rows)
        n = len(self.rows)
        self.matrix = DomainMatrix([list(row) for row in self.rows], (n, n), xi.ring.to_domain())

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, xi: XiRing) -> "PolyMatrix":
        n = xi.n
        return cls(xi, [[1 if r == c else 0 for c in range(n)] for r in range(n)])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(self.xi, self.matrix.matmul(other.matrix).to_list())

    def key(self) -> Tuple:
        """Hashable canonical form (terms in graded-lexicographic order)."""
        return tuple(
            tuple(tuple((m, int(c)) for m, c in p.terms()) for p in row)
            for row in self.rows
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.xi.n == other.xi.n and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def evaluate(self, values: Dict[Tuple[int, int], int]) -> IntMatrix:
        """Substitute integers for the variables: ``values[(i, j)]`` for ξ_{i,j}."""
        # the placeholder generator of rank 1 is set to 0
        point = [values[pair] for pair in self.xi.pairs] or [0]
        M = np.zeros((self.n, self.n), dtype=object)
        for r, row in enumerate(self.rows):
            for c, p in enumerate(row):
                M[r, c] = int(p(*point))
        return M

    def specialize(self, value: int = 1) -> IntMatrix:
        """Set every ξ to ``value``."""
        return self.evaluate({pair: value for pair in self.xi.pairs})

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "entries": [[polynomial_to_json(self.xi, p) for p in row] for row in self.rows],
        }


def polymatrix_to_json(M: PolyMatrix) -> Dict[str, Any]:
    """``{"n": dim, "entries": [[polynomial terms, ...], ...]}``"""
    return M.to_json()


def polynomial_to_json(xi: XiRing, p) -> List[Dict[str, Any]]:
    """``[{"coeff": decimal string, "monomial": {"i,j": exponent}}]`` in grlex order."""
    terms = []
    for monom, coeff in p.terms():
        terms.append({
            "coeff": str(int(coeff)),
            "monomial": {f"{i},{j}": e for (i, j), e in zip(xi.pairs, monom) if e},
        })
    return terms


# =============================================================================
# κₙ
# =============================================================================

def kappa_generator(n: int, i: int) -> PolyMatrix:
    """
    Matrix of a_i under κₙ.

    :param n: rank
    :type n: int
    :param i: letter in ``1..n``
    :type i: int
    :return: identity with row k = n-i+1 zeroed and column k above the diagonal equal to ξ_{1,k}..ξ_{k-1,k}
    :rtype: PolyMatrix
    :raises LetterOutOfRangeError: if ``i`` is outside ``1..n``
    """
    k = generator_column(n, i)
    xi = xi_ring(n)
    rows: List[List[Any]] = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    rows[k - 1] = [0] * n
    for r in range(1, k):
        rows[r - 1][k - 1] = xi.gen(r, k)
    return PolyMatrix(xi, rows)


def kappa(x: Word) -> PolyMatrix:
    """κₙ(x) along the letters of ``x``."""
    n = x.rank
    M = PolyMatrix.identity(xi_ring(n))
    for i in x.letters:
        M = M @ kappa_generator(n, i)
    return M


def specialize(M: PolyMatrix, value: int = 1) -> IntMatrix:
    return M.specialize(value)


# =============================================================================
# m / l sequences and κ′ₙ
# =============================================================================

@dataclass(frozen=True)
class MLSequences:
    """``m[i-1]`` and ``l[i-1]`` hold mᵢ and lᵢ."""

    m: Tuple[int, ...]
    l: Tuple[int, ...]


@lru_cache(maxsize=None)
def ml_sequences(upto: int) -> MLSequences:
    """
    m₁ = l₁ = 1, mᵢ = l_{i-1} + 1, lᵢ = i^(2^i) · mᵢ^(i·2^i).

    l₃ already has more than 90 digits; everything stays exact.

    :raises ValueError: if ``upto < 1``

    Example:
        >>> ml_sequences(2).l
        (1, 4096)
    """
    if upto < 1:
        raise ValueError(f"upto must be >= 1, got {upto}")
    m, l = [1], [1]
    for i in range(2, upto + 1):
        m.append(l[-1] + 1)
        l.append(i ** (2 ** i) * m[-1] ** (i * 2 ** i))
    return MLSequences(tuple(m), tuple(l))


def kappa_prime_values(n: int) -> Dict[Tuple[int, int], int]:
    """ξ_{i,j} ↦ m_j^i."""
    m = ml_sequences(n).m
    return {(i, j): m[j - 1] ** i for i, j in xi_ring(n).pairs}


@lru_cache(maxsize=None)
def kappa_prime_generators(n: int) -> Tuple[IntMatrix, ...]:
    values = kappa_prime_values(n)
    gens = tuple(kappa_generator(n, i).evaluate(values) for i in range(1, n + 1))
    for g in gens:
        g.setflags(write=False)
    return gens


def kappa_prime_generator(n: int, i: int) -> IntMatrix:
    generator_column(n, i)
    return kappa_prime_generators(n)[i - 1].copy()


def kappa_prime(x: Word) -> IntMatrix:
    """κ′ₙ(x): evaluated generator matrices multiplied as big-integer matrices."""
    n = x.rank
    gens = kappa_prime_generators(n)
    M = int_identity(n)
    for i in x.letters:
        M = np.dot(M, gens[i - 1])
    return M


# =============================================================================
# Table-backed representations
# =============================================================================

def kappa_representation(table: SemigroupTable) -> MatrixRepresentation:
    n = table.rank
    gens = [kappa_generator(n, i) for i in range(1, n + 1)]
    return MatrixRepresentation(
        table, gens, PolyMatrix.identity(xi_ring(n)), matmul=lambda a, b: a @ b
    )


def kappa_prime_representation(table: SemigroupTable) -> MatrixRepresentation:
    n = table.rank
    return MatrixRepresentation(table, list(kappa_prime_generators(n)), int_identity(n))
