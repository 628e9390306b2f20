"""
Exact linear algebra helpers
정확한(유리수) 선형대수 보조 함수

Ranks are computed by sympy's sparse ``DomainMatrix`` over QQ, so no floating
point is involved anywhere.
"""

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Scalar = Union[int, Fraction]


def _to_qq(value: Scalar):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def exact_rank(rows: Iterable[Union[Sequence[Scalar], Mapping[int, Scalar]]], ncols: int) -> int:
    """
    Rank over ℚ of a matrix given row by row.

    :param rows: dense rows, or sparse rows as ``{column: value}`` mappings
    :param ncols: number of columns
    :type ncols: int
    :return: the rank
    :rtype: int

    Example:
        >>> exact_rank([[1, 2], [2, 4]], 2)
        1
        >>> exact_rank([{0: Fraction(1, 2)}, {1: 3}], 2)
        2
    """
    sparse = {}
    nrows = 0
    for r, row in enumerate(rows):
        nrows = r + 1
        items = row.items() if isinstance(row, Mapping) else enumerate(row)
        entries = {int(c): _to_qq(v) for c, v in items if v}
        if entries:
            sparse[r] = entries

    if not sparse:
        return 0
    return int(DomainMatrix(sparse, (nrows, ncols), QQ).rank())
