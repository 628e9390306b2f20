"""
Kiselman's integer representation ψₙ
정수 행렬 표현 ψₙ 과 높이(height) 함수

Matrices are ``numpy`` arrays with ``dtype=object`` holding Python ints, so
entries never overflow. The generator a_i goes to A_k with k = n-i+1: the
identity with row k zeroed and the entries above the diagonal in column k set to 1.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..core.errors import LetterOutOfRangeError, NotNilpotentError
from ..core.linalg import exact_rank
from ..core.words import Word, check_rank
from ..semigroup.table import SemigroupTable

logger = logging.getLogger("kiselman.repr")

IntMatrix = np.ndarray


def int_identity(n: int) -> IntMatrix:
    M = np.zeros((n, n), dtype=object)
    for r in range(n):
        M[r, r] = 1
    return M


def int_matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    return np.dot(A, B)


def matrix_key(M: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    """Hashable form of an integer matrix."""
    return tuple(tuple(int(v) for v in row) for row in M)


def matrices_equal(A: IntMatrix, B: IntMatrix) -> bool:
    return matrix_key(A) == matrix_key(B)


def generator_column(n: int, i: int) -> int:
    check_rank(n)
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
        raise LetterOutOfRangeError(f"Generator {i!r} is outside 1..{n}")
    return n - i + 1


def kiselman_generator(n: int, i: int) -> IntMatrix:
    """
    Matrix of the generator a_i under ψₙ.

    :param n: rank
    :type n: int
    :param i: letter in ``1..n``
    :type i: int
    :return: A_{n-i+1}
    :rtype: numpy.ndarray (dtype=object)
    :raises LetterOutOfRangeError: if ``i`` is outside ``1..n``

    Example:
        >>> kiselman_generator(2, 1).tolist()
        [[1, 1], [0, 0]]
    """
    k = generator_column(n, i)
    M = int_identity(n)
    M[k - 1, :] = 0
    for r in range(k - 1):
        M[r, k - 1] = 1
    return M


def psi(x: Word) -> IntMatrix:
    """ψₙ(x): product of generator matrices along the letters of ``x``."""
    n = x.rank
    M = int_identity(n)
    for i in x.letters:
        M = int_matmul(M, kiselman_generator(n, i))
    return M


def matrix_height(M: IntMatrix) -> int:
    """Σ over rows r (1-based) of (#nonzero entries in row r)·2^r."""
    return sum(
        int(np.count_nonzero(M[r] != 0)) * 2 ** (r + 1)
        for r in range(M.shape[0])
    )


def height(x: Word) -> int:
    """Height of ψₙ(x); 0 exactly for elements mapped to the zero matrix."""
    return matrix_height(psi(x))


def nilpotency_class_of_matrix(M: IntMatrix) -> int:
    """
    Least ``k ≥ 1`` with ``M^k = 0``.

    :raises NotNilpotentError: if ``M^n ≠ 0`` for the dimension ``n``
    """
    n = M.shape[0]
    power = M
    for k in range(1, n + 1):
        if not any(v != 0 for v in power.flat):
            return k
        power = int_matmul(power, M)
    raise NotNilpotentError(f"Matrix of dimension {n} has nonzero {n}-th power")


def matrix_to_json(M: IntMatrix) -> Dict[str, object]:
    """``{"n": dim, "entries": [[decimal string, ...], ...]}``"""
    return {"n": int(M.shape[0]), "entries": [[str(int(v)) for v in row] for row in M]}


class MatrixRepresentation:
    """
    Images of every element of an enumerated table, memoised by index.

    ``generators[i-1]`` is the image of a_i and ``matmul`` multiplies two
    images. Images are filled along the enumeration tree (each element is its
    parent times one generator) and computed once.
    """

    def __init__(self, table: SemigroupTable, generators: List[object], identity: object, matmul=None):
        self.table = table
        self.generators = generators
        self.matmul = matmul or int_matmul
        self._images: List[object] = [identity]

    @classmethod
    def psi(cls, table: SemigroupTable) -> "MatrixRepresentation":
        n = table.rank
        return cls(table, [kiselman_generator(n, i) for i in range(1, n + 1)], int_identity(n))

    def _fill(self, upto: int) -> None:
        t = self.table
        for y in range(len(self._images), upto + 1):
            parent = self._images[int(t.parent[y])]
            self._images.append(self.matmul(parent, self.generators[int(t.last_letter[y]) - 1]))

    def image(self, x: int) -> object:
        if x >= len(self._images):
            self._fill(x)
        return self._images[x]

    def images(self) -> List[object]:
        self._fill(self.table.size - 1)
        return list(self._images)


def height_decrease_check(table: SemigroupTable, rep: Optional[MatrixRepresentation] = None) -> List[Dict[str, object]]:
    """
    Left multiplication by a generator either fixes an element or lowers its height.

    :return: counterexamples ``{"letter", "alpha", "product"}``; empty when the property holds
    """
    rep = rep or MatrixRepresentation.psi(table)
    heights = [matrix_height(M) for M in rep.images()]
    failures = []
    for alpha in range(table.size):
        for i in range(1, table.rank + 1):
            beta = int(table.left[alpha, i - 1])
            if beta != alpha and heights[beta] >= heights[alpha]:
                failures.append({
                    "letter": i,
                    "alpha": str(table.word(alpha)),
                    "product": str(table.word(beta)),
                })
    return failures


def cyclic_vector_check(table: SemigroupTable) -> bool:
    """The last standard basis vector generates ℚⁿ under ψₙ(Kₙ)."""
    n = table.rank
    rep = MatrixRepresentation.psi(table)
    vectors = [[int(v) for v in M[:, n - 1]] for M in rep.images()]
    return exact_rank(vectors, n) == n
