"""
Faithfulness certification and relation checks
표현의 충실성(faithfulness) 검증

A representation is faithful on Kₙ iff the images of all |Kₙ| elements are
pairwise distinct; a collision is returned as a witness pair of canonical words.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from ..core.words import Word, check_rank
from ..semigroup.table import SemigroupTable
from .matrices import MatrixRepresentation, kiselman_generator, matrix_key
from .polynomial import (
    PolyMatrix,
    kappa_prime_generators,
    kappa_generator,
    kappa_prime_representation,
    kappa_representation,
    ml_sequences,
)

logger = logging.getLogger("kiselman.repr")

KINDS = ("psi", "kappa", "kappa-prime")


def representation(table: SemigroupTable, kind: str) -> MatrixRepresentation:
    """
    Memoised images of one representation family on an enumerated table.

    :raises ValueError: on an unknown kind
    """
    if kind == "psi":
        return MatrixRepresentation.psi(table)
    if kind == "kappa":
        return kappa_representation(table)
    if kind == "kappa-prime":
        return kappa_prime_representation(table)
    raise ValueError(f"Unknown representation '{kind}'. Use one of {KINDS}")


def _key(image) -> Tuple:
    return image.key() if isinstance(image, PolyMatrix) else matrix_key(image)


def faithfulness_check(
    table: SemigroupTable,
    rep: str,
    images: Optional[MatrixRepresentation] = None
) -> Tuple[bool, Optional[Tuple[Word, Word]]]:
    """
    Decide whether a representation separates all elements.

    :param table: enumerated Kₙ
    :type table: SemigroupTable
    :param rep: ``"psi"``, ``"kappa"`` or ``"kappa-prime"``
    :type rep: str
    :param images: precomputed images to reuse (optional)
    :return: ``(True, None)`` or ``(False, (x, y))`` with x ≠ y of equal image
    :rtype: Tuple[bool, Optional[Tuple[Word, Word]]]

    Example:
        >>> faithfulness_check(enumerate_semigroup(3), "psi")
        (True, None)
    """
    images = images or representation(table, rep)
    seen: Dict[Tuple, int] = {}
    for x in range(table.size):
        key = _key(images.image(x))
        if key in seen:
            witness = (table.word(seen[key]), table.word(x))
            logger.info("%s is not faithful on K_%d: '%s' ~ '%s'", rep, table.rank, *witness)
            return False, witness
        seen[key] = x
    return True, None


def _generators(kind: str, n: int) -> Tuple[List, Callable]:
    if kind == "psi":
        return [kiselman_generator(n, i) for i in range(1, n + 1)], matrix_key
    if kind == "kappa":
        return [kappa_generator(n, i) for i in range(1, n + 1)], PolyMatrix.key
    if kind == "kappa-prime":
        return list(kappa_prime_generators(n)), matrix_key
    raise ValueError(f"Unknown representation '{kind}'. Use one of {KINDS}")


def relations_check(kind: str, n: int) -> List[str]:
    """
    Verify M_i² = M_i and M_i M_j M_i = M_j M_i M_j = M_j M_i for i < j, exactly.

    :return: descriptions of the violated relations (empty when all hold)
    """
    check_rank(n)
    gens, key = _generators(kind, n)
    mul = (lambda a, b: a @ b) if kind == "kappa" else (lambda a, b: a.dot(b))

    violations = []
    for i in range(1, n + 1):
        A = gens[i - 1]
        if key(mul(A, A)) != key(A):
            violations.append(f"M{i}^2 != M{i}")
        for j in range(i + 1, n + 1):
            B = gens[j - 1]
            ba = key(mul(B, A))
            if key(mul(mul(A, B), A)) != ba:
                violations.append(f"M{i}M{j}M{i} != M{j}M{i}")
            if key(mul(mul(B, A), B)) != ba:
                violations.append(f"M{j}M{i}M{j} != M{j}M{i}")
    return violations


def specialization_check(table: SemigroupTable) -> List[str]:
    """Elements whose κ image at ξ ≡ 1 differs from their ψ image."""
    kappa_images = kappa_representation(table)
    psi_images = MatrixRepresentation.psi(table)
    return [
        str(table.word(x))
        for x in range(table.size)
        if matrix_key(kappa_images.image(x).specialize(1)) != matrix_key(psi_images.image(x))
    ]


def kappa_prime_bound_check(table: SemigroupTable) -> List[str]:
    """
    Elements with a κ′ entry outside ``0 <= entry < l_n``.

    For n = 1 the identity already has the entry l_1 = 1, so there the bound is ``<= l_1``.
    """
    bound = ml_sequences(table.rank).l[-1]
    if table.rank == 1:
        bound += 1
    images = kappa_prime_representation(table)
    failures = []
    for x in range(table.size):
        if any(not 0 <= int(v) < bound for v in images.image(x).flat):
            failures.append(str(table.word(x)))
    return failures
