"""
Enumeration of Kₙ and its product table
Kₙ 원소 열거 및 곱셈표

Elements are canonical words, indexed in length-then-lexicographic order with
the unit e at index 0. The right Cayley graph (x ↦ x·a_i) is always stored;
the full |S|×|S| product table is materialised on first use when it fits the
configured cap, otherwise products are computed by walking the Cayley graph.
"""

import logging
from collections import deque
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import LetterOutOfRangeError, RankMismatchError, ResourceLimitError
from ..core.rewrite import normalize
from ..core.words import Content, Word, check_rank

logger = logging.getLogger("kiselman.semigroup")


def multiply(x: Word, y: Word) -> Word:
    """
    Product of two elements given by words: the canonical form of ``x + y``.

    :param x: left factor
    :type x: Word
    :param y: right factor
    :type y: Word
    :return: canonical word of ``xy``
    :rtype: Word
    :raises RankMismatchError: if the ranks differ

    Example:
        >>> str(multiply(Word((2, 1), 2), Word((2,), 2)))
        '2,1'
    """
    return normalize(x + y)


class SemigroupTable:
    """
    Enumerated Kₙ.

    Attributes:
        rank: n
        elements: canonical words in length-then-lexicographic order
        index: canonical word -> position
        parent: ``parent[y]`` is the index of ``elements[y]`` without its last letter
        last_letter: last letter of each element (0 for e)
        right: ``right[x, i-1]`` is the index of ``x·a_i``
        contents: content bitmask of each element
    """

    def __init__(
        self,
        rank: int,
        elements: Sequence[Word],
        product_cap: int = 4_000_000,
        transitions: Optional[Dict[Word, Sequence[Word]]] = None
    ):
        self.rank = rank
        self.elements: Tuple[Word, ...] = tuple(elements)
        self.index: Dict[Word, int] = {w: k for k, w in enumerate(self.elements)}
        self.product_cap = product_cap

        size = len(self.elements)
        self.parent = np.zeros(size, dtype=np.int64)
        self.last_letter = np.zeros(size, dtype=np.int64)
        self.contents = np.zeros(size, dtype=np.int64)
        for k, w in enumerate(self.elements[1:], start=1):
            p = self.index[w[:-1]]
            self.parent[k] = p
            self.last_letter[k] = w[-1]
            self.contents[k] = self.contents[p] | (1 << (w[-1] - 1))

        self.right = np.zeros((size, rank), dtype=np.int64)
        for k, w in enumerate(self.elements):
            if transitions is not None:
                targets = transitions[w]
            else:
                targets = [normalize(w + Word((i,), rank)) for i in range(1, rank + 1)]
            for i, v in enumerate(targets):
                self.right[k, i] = self.index[v]

        for arr in (self.parent, self.last_letter, self.contents, self.right):
            arr.setflags(write=False)

        self._product: Optional[np.ndarray] = None
        self._left: Optional[np.ndarray] = None

    # -------------------------------------------------------------------------
    # basic queries
    # -------------------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    @property
    def zero(self) -> int:
        """Index of e_{1..n}, the two-sided zero."""
        return self.element_of(Word(tuple(range(self.rank, 0, -1)), self.rank))

    def word(self, x: int) -> Word:
        return self.elements[x]

    def content_of(self, x: int) -> Content:
        return Content(int(self.contents[x]), self.rank)

    def element_of(self, w: Word) -> int:
        """Index of the element represented by any word ``w``."""
        if w.rank != self.rank:
            raise RankMismatchError(f"Word of rank {w.rank} in table of rank {self.rank}")
        x = 0
        for i in w.letters:
            x = int(self.right[x, i - 1])
        return x

    def generator(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise LetterOutOfRangeError(f"Generator {i} is outside 1..{self.rank}")
        return int(self.right[0, i - 1])

    # -------------------------------------------------------------------------
    # products
    # -------------------------------------------------------------------------

    @property
    def has_product_table(self) -> bool:
        return self.size * self.size <= self.product_cap

    @property
    def product(self) -> np.ndarray:
        """
        Full product table, ``product[x, y]`` = index of ``xy``.

        :raises ResourceLimitError: if |S|² exceeds ``product_cap``
        """
        if self._product is None:
            if not self.has_product_table:
                raise ResourceLimitError(
                    f"Product table of K_{self.rank} needs {self.size ** 2} entries; "
                    f"cap is {self.product_cap}"
                )
            table = np.empty((self.size, self.size), dtype=np.int64)
            table[:, 0] = np.arange(self.size)
            # parent[y] < y, so columns fill in index order
            for y in range(1, self.size):
                table[:, y] = self.right[table[:, self.parent[y]], self.last_letter[y] - 1]
            table.setflags(write=False)
            self._product = table
        return self._product

    @property
    def left(self) -> np.ndarray:
        """``left[x, i-1]`` is the index of ``a_i·x``."""
        if self._left is None:
            left = np.empty((self.size, self.rank), dtype=np.int64)
            for i in range(1, self.rank + 1):
                g = self.generator(i)
                for x in range(self.size):
                    left[x, i - 1] = self.multiply(g, x)
            left.setflags(write=False)
            self._left = left
        return self._left

    def multiply(self, x: int, y: int) -> int:
        if self._product is not None or self.has_product_table:
            return int(self.product[x, y])
        for i in self.elements[y].letters:
            x = int(self.right[x, i - 1])
        return x

    def power(self, x: int, k: int) -> int:
        """``x`` to the ``k``-th power (``k = 0`` gives e)."""
        result = 0
        for _ in range(k):
            result = self.multiply(result, x)
        return result

    def multiply_words(self, x: Word, y: Word) -> Word:
        return self.elements[self.multiply(self.element_of(x), self.element_of(y))]

    def __repr__(self) -> str:
        return f"SemigroupTable(rank={self.rank}, size={self.size})"


class SemigroupEnumerator:
    """
    Breadth-first closure of {e} under right multiplication by the generators.

    Budgets live in ``current_settings`` and can be swapped with presets.
    """

    # 기본 설정값 (Default Configuration)
    DEFAULT_CONFIG = {
        'element_cap': 100_000,      # |K_6| = 83973 still fits
        'product_cap': 4_000_000,    # |S|² entries materialised at most
    }

    PRESETS = {
        'small': {'element_cap': 5_000, 'product_cap': 4_000_000},
        'large': {'element_cap': 2_000_000, 'product_cap': 50_000_000},
    }

    def __init__(self, preset: str = "default", verbose: bool = False, **overrides):
        self.verbose = verbose
        self.current_settings = self.DEFAULT_CONFIG.copy()
        if preset != "default":
            self.load_preset(preset)
        self.current_settings.update(overrides)

    def load_preset(self, preset_name: str) -> 'SemigroupEnumerator':
        self.current_settings = self.DEFAULT_CONFIG.copy()
        if preset_name in self.PRESETS:
            self.current_settings.update(self.PRESETS[preset_name])
        elif preset_name != "default":
            logger.warning("Unknown preset '%s'. Loading default.", preset_name)
        return self

    def get_current_settings(self) -> Dict[str, int]:
        return self.current_settings.copy()

    def enumerate(self, n: int) -> SemigroupTable:
        """
        Enumerate Kₙ.

        :param n: rank
        :type n: int
        :return: the complete table
        :rtype: SemigroupTable
        :raises ResourceLimitError: if more than ``element_cap`` elements appear
        """
        check_rank(n)
        cap = self.current_settings['element_cap']
        if self.verbose:
            print(f"[SemigroupEnumerator] Enumerating K_{n} (cap {cap})")

        unit = Word.unit(n)
        seen = {unit}
        found: List[Word] = [unit]
        transitions: Dict[Word, List[Word]] = {}
        queue = deque([unit])
        while queue:
            w = queue.popleft()
            transitions[w] = targets = []
            for i in range(1, n + 1):
                v = normalize(w + Word((i,), n))
                targets.append(v)
                if v not in seen:
                    seen.add(v)
                    found.append(v)
                    queue.append(v)
                    if len(found) > cap:
                        logger.warning("K_%d exceeds the element cap %d", n, cap)
                        raise ResourceLimitError(
                            f"K_{n} has more than {cap} elements; raise element_cap"
                        )

        found.sort(key=lambda v: (len(v), v.letters))
        table = SemigroupTable(
            n, found,
            product_cap=self.current_settings['product_cap'],
            transitions=transitions
        )
        logger.info("K_%d enumerated: %d elements", n, table.size)
        if self.verbose:
            print(f"[SemigroupEnumerator] K_{n} has {table.size} elements")
        return table


@lru_cache(maxsize=16)
def enumerate_semigroup(
    n: int,
    element_cap: Optional[int] = None,
    product_cap: Optional[int] = None
) -> SemigroupTable:
    """
    Enumerate Kₙ with default budgets, optionally overridden.

    Results are cached per argument tuple; tables are read-only.

    Example:
        >>> enumerate_semigroup(3).size
        18
    """
    overrides = {}
    if element_cap is not None:
        overrides['element_cap'] = element_cap
    if product_cap is not None:
        overrides['product_cap'] = product_cap
    return SemigroupEnumerator(**overrides).enumerate(n)


def right_cayley_graph(table: SemigroupTable) -> np.ndarray:
    """|S|×n array, entry ``[x, i-1]`` the index of ``x·a_i``."""
    return table.right.copy()
