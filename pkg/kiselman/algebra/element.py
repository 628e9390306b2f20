"""
The semigroup algebra ℚKₙ
반군대수 ℚKₙ 원소 연산

An :class:`AlgebraElement` is a finitely supported map from element indices
of a :class:`SemigroupTable` to exact ``fractions.Fraction`` coefficients. The
zero element e_{1..n} of Kₙ is an ordinary basis vector here.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

import numpy as np

from ..core.errors import RankMismatchError
from ..core.words import Content, Word, all_contents, check_rank
from ..representations.matrices import psi
from ..semigroup.table import SemigroupTable

logger = logging.getLogger("kiselman.algebra")

Scalar = Union[int, Fraction]


class SemigroupAlgebra:
    """ℚKₙ over an enumerated table; factory for its elements."""

    def __init__(self, table: SemigroupTable):
        self.table = table

    @property
    def rank(self) -> int:
        return self.table.rank

    @property
    def dimension(self) -> int:
        return self.table.size

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return self.basis(0)

    def basis(self, x: int) -> "AlgebraElement":
        return AlgebraElement(self, {x: Fraction(1)})

    def word(self, w: Word) -> "AlgebraElement":
        """Basis vector of the element represented by ``w``."""
        return self.basis(self.table.element_of(w))

    def generator(self, i: int) -> "AlgebraElement":
        return self.basis(self.table.generator(i))

    def combination(self, terms: Iterable[Tuple[Word, Scalar]]) -> "AlgebraElement":
        coeffs: Dict[int, Fraction] = {}
        for w, c in terms:
            x = self.table.element_of(w)
            coeffs[x] = coeffs.get(x, Fraction(0)) + Fraction(c)
        return AlgebraElement(self, coeffs)


class AlgebraElement:
    """
    Element of ℚKₙ.

    Supports ``+``, ``-``, scalar ``*`` and the algebra product ``*``.
    No zero coefficient is ever stored.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: SemigroupAlgebra, coeffs: Mapping[int, Scalar]):
        self.algebra = algebra
        self.coeffs: Dict[int, Fraction] = {
            int(x): Fraction(c) for x, c in coeffs.items() if c != 0
        }

    @property
    def rank(self) -> int:
        return self.algebra.rank

    def _check(self, other: "AlgebraElement") -> None:
        if other.algebra.table is not self.algebra.table:
            if other.rank != self.rank:
                raise RankMismatchError(
                    f"Algebra elements of rank {self.rank} and {other.rank}"
                )
            raise RankMismatchError("Algebra elements come from different tables")

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> List[int]:
        return sorted(self.coeffs)

    def coefficient(self, x: int) -> Fraction:
        return self.coeffs.get(x, Fraction(0))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out.get(x, Fraction(0)) + c
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {x: -c for x, c in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: Union["AlgebraElement", Scalar]) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return algebra_multiply(self, other)
        return AlgebraElement(self.algebra, {x: c * other for x, c in self.coeffs.items()})

    def __rmul__(self, scalar: Scalar) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {x: scalar * c for x, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.table is other.algebra.table and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def to_json(self) -> List[Dict[str, object]]:
        """``[{"word": [...], "coeff": "p/q"}, ...]`` sorted by element index."""
        table = self.algebra.table
        return [
            {"word": list(table.word(x).letters), "coeff": _fraction_text(self.coeffs[x])}
            for x in self.support()
        ]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        table = self.algebra.table
        parts = []
        for x in self.support():
            label = str(table.word(x)) or "e"
            parts.append(f"{_fraction_text(self.coeffs[x])}*[{label}]")
        return " + ".join(parts)

    __repr__ = __str__


def _fraction_text(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def algebra_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """
    Bilinear extension of the product of Kₙ.

    :raises RankMismatchError: if the operands come from different algebras

    Example:
        >>> A = SemigroupAlgebra(enumerate_semigroup(1))
        >>> (A.one() - A.generator(1)) * A.generator(1)
        0
    """
    a._check(b)
    table = a.algebra.table
    out: Dict[int, Fraction] = {}
    for x, c in a.coeffs.items():
        for y, d in b.coeffs.items():
            z = table.multiply(x, y)
            out[z] = out.get(z, Fraction(0)) + c * d
    return AlgebraElement(a.algebra, out)


# =============================================================================
# One-dimensional representations ρ_X
# =============================================================================

def rho(X: Content, x: Word) -> Fraction:
    """ρ_X(x) = 1 if content(x) ⊆ X else 0."""
    if X.rank != x.rank:
        raise RankMismatchError(f"Content of rank {X.rank} and word of rank {x.rank}")
    return Fraction(1) if all(i in X for i in x.letters) else Fraction(0)


def rho_on_algebra(X: Content, a: AlgebraElement) -> Fraction:
    """ρ_X extended linearly to ℚKₙ."""
    if X.rank != a.rank:
        raise RankMismatchError(f"Content of rank {X.rank} and algebra of rank {a.rank}")
    contents = a.algebra.table.contents
    return sum(
        (c for x, c in a.coeffs.items() if int(contents[x]) & ~X.bits == 0),
        Fraction(0),
    )


def rho_vector(table: SemigroupTable, X: Content) -> np.ndarray:
    """ρ_X on every element at once, as a 0/1 array."""
    return ((table.contents & ~X.bits) == 0).astype(np.int64)


def rho_quotient_count(n: int) -> int:
    """
    Number of ρ_X vanishing on the zero element e_{1..n}.

    These are the simple modules of the algebra with the zero element
    identified with 0; every X except the full set qualifies, so the count is 2ⁿ - 1.
    """
    zero = Word(tuple(range(check_rank(n), 0, -1)), n)
    return sum(1 for X in all_contents(n) if rho(X, zero) == 0)


def linear_psi(a: AlgebraElement) -> np.ndarray:
    """ψₙ extended linearly: an n×n matrix of ``Fraction`` entries."""
    n = a.rank
    M = np.full((n, n), Fraction(0), dtype=object)
    for x, c in a.coeffs.items():
        M = M + c * psi(a.algebra.table.word(x))
    return M
