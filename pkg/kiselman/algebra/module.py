"""
The projective module on the left ideal Kₙ·πₙ
왼쪽 아이디얼 Kₙ·πₙ 위의 사영 가군

πₙ = e_{2..n}. The nonzero elements of the left ideal Kₙ·πₙ form a basis
(the zero element e_{1..n} is identified with 0), and every x in Kₙ acts by
left multiplication, sending a basis word to a basis word or to 0. This module
is faithful for every n.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..core.errors import InvalidContentError
from ..core.words import Content, Word, all_contents
from ..semigroup.structure import idempotent
from ..semigroup.table import SemigroupTable
from .corner import corner_dimension
from .element import SemigroupAlgebra
from .idempotents import kiselman_projection, primitive_idempotent

logger = logging.getLogger("kiselman.algebra")

# marks "sent to the zero element" in action maps
ZERO = -1


def _pi_n_content(n: int) -> Content:
    return Content.from_letters(range(2, n + 1), n)


@dataclass
class IdealModule:
    """
    Left ideal module with a monomial basis.

    Attributes:
        table: the enumerated Kₙ acting on the module
        generator: index of the idempotent generating the ideal
        basis: indices of the nonzero ideal elements, increasing
    """

    table: SemigroupTable
    generator: int
    basis: Tuple[int, ...]

    def __post_init__(self):
        self._position: Dict[int, int] = {b: k for k, b in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_words(self) -> List[Word]:
        return [self.table.word(b) for b in self.basis]

    def action_map(self, x: int) -> Tuple[int, ...]:
        """Basis position of ``x·b`` for each basis element b, or ``ZERO``."""
        zero = self.table.zero
        out = []
        for b in self.basis:
            y = self.table.multiply(x, b)
            out.append(ZERO if y == zero else self._position[y])
        return tuple(out)

    def action(self, x: int) -> np.ndarray:
        """0/1 matrix of ``x``; column k is the image of basis element k."""
        M = np.zeros((self.dimension, self.dimension), dtype=np.int64)
        for k, target in enumerate(self.action_map(x)):
            if target != ZERO:
                M[target, k] = 1
        return M


def projective_module(table: SemigroupTable) -> IdealModule:
    """
    The module on the nonzero elements of Kₙ·e_{2..n}.

    Example:
        >>> m = projective_module(enumerate_semigroup(2))
        >>> [str(w) for w in m.basis_words()]
        ['2', '1,2']
    """
    n = table.rank
    f = table.element_of(idempotent(_pi_n_content(n)))
    zero = table.zero
    ideal = {table.multiply(x, f) for x in range(table.size)}
    ideal.discard(zero)
    module = IdealModule(table, f, tuple(sorted(ideal)))
    logger.debug("Projective module of K_%d has dimension %d", n, module.dimension)
    return module


def module_homomorphism_check(m: IdealModule) -> List[str]:
    """action(xy) = action(x)·action(y) for all x, y, and action(e) = identity."""
    table = m.table
    maps = [m.action_map(x) for x in range(table.size)]
    failures = []
    if maps[0] != tuple(range(m.dimension)):
        failures.append("e does not act as the identity")
    for x in range(table.size):
        for y in range(table.size):
            composed = tuple(ZERO if t == ZERO else maps[x][t] for t in maps[y])
            if maps[table.multiply(x, y)] != composed:
                failures.append(f"action({table.word(x)}*{table.word(y)}) is not a product")
    return failures


def module_faithfulness_check(m: IdealModule) -> bool:
    """All |Kₙ| action matrices are pairwise distinct."""
    images = {m.action_map(x) for x in range(m.table.size)}
    return len(images) == m.table.size


def projective_module_dimension_check(m: IdealModule, algebra: Optional[SemigroupAlgebra] = None) -> List[str]:
    """
    The basis counts the nonzero elements of the ideal, and πₙ·ℚKₙ·πₙ has dimension 2.
    """
    table = m.table
    algebra = algebra or SemigroupAlgebra(table)
    failures = []

    column = np.array([table.multiply(x, m.generator) for x in range(table.size)])
    nonzero = np.unique(column[column != table.zero])
    if m.dimension != len(nonzero):
        failures.append(f"dimension {m.dimension} != {len(nonzero)} nonzero ideal elements")

    pi_n = kiselman_projection(algebra, table.rank)
    dim = corner_dimension(pi_n, pi_n)
    if dim != 2:
        failures.append(f"dim pi_n QK_n pi_n = {dim}, expected 2")
    return failures


def nonfaithful_projective_witness(algebra: SemigroupAlgebra, X: Content) -> bool:
    """
    Whether w = e_{2..n} - e_{1..n} annihilates ℚKₙ·e_X⁽ⁿ⁾.

    True means the projective module of X is not faithful: w ≠ 0 acts as 0.

    :raises InvalidContentError: if ``X = {2..n}``, the one faithful case
    """
    n = algebra.rank
    if X == _pi_n_content(n):
        raise InvalidContentError(f"X = {X} gives the faithful projective module")
    w = algebra.word(idempotent(_pi_n_content(n))) - algebra.basis(algebra.table.zero)
    eX = primitive_idempotent(algebra, X)
    return all((w * algebra.basis(x) * eX).is_zero() for x in range(algebra.dimension))


def nonfaithful_projective_check(algebra: SemigroupAlgebra) -> List[str]:
    """Contents X ≠ {2..n} whose annihilation certificate fails."""
    skip = _pi_n_content(algebra.rank)
    return [
        str(X) for X in all_contents(algebra.rank)
        if X != skip and not nonfaithful_projective_witness(algebra, X)
    ]
