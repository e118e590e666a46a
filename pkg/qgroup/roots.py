"""
Root datum of type A_{2N} with the priming reflection.

Positive roots of sl(k) are pairs (i, j), 1 <= i < j <= k, for the root
alpha_i + ... + alpha_{j-1}.
"""

from dataclasses import dataclass
from itertools import combinations

from core.exceptions import DimensionMismatchError


def positive_roots(k):
    """
    Positive roots of sl(k) in lexicographic order.
    """
    return list(combinations(range(1, k + 1), 2))


def descending_roots(k):
    # gl(3): (2,3), (1,3), (1,2)
    return sorted(positive_roots(k), reverse=True)


def cartan_entry(i, j):
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


@dataclass(frozen=True)
class RootDatum:
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise DimensionMismatchError(f'Rank must be positive, got {self.rank}')

    @property
    def n(self):
        return 2 * self.rank + 1

    @property
    def cartan(self):
        size = self.n - 1
        return tuple(tuple(cartan_entry(i, j) for j in range(1, size + 1)) for i in range(1, size + 1))

    def positive_roots(self, k=None):
        """
        Positive roots of sl(k) in lexicographic order (gl(n) when k is omitted).
        """
        return positive_roots(self.n if k is None else k)

    def ascending_order(self, k=None):
        return self.positive_roots(k)

    def descending_order(self, k=None):
        return descending_roots(self.n if k is None else k)

    def prime_index(self, i):
        if not 1 <= i <= self.n:
            raise DimensionMismatchError(f'Index {i} outside 1..{self.n}')
        return 2 * self.rank + 2 - i

    def prime_simple(self, j):
        if not 1 <= j <= self.n - 1:
            raise DimensionMismatchError(f'Simple root {j} outside 1..{self.n - 1}')
        return 2 * self.rank + 1 - j

    def prime_root(self, root):
        i, j = root
        return self.prime_index(j), self.prime_index(i)

    @staticmethod
    def is_simple(root):
        i, j = root
        return j == i + 1

    @staticmethod
    def height(root):
        i, j = root
        return j - i

    @staticmethod
    def split(root):
        """
        (i, j) -> ((i, j-1), (j-1, j)); the last simple root is peeled off.
        """
        i, j = root
        if j <= i + 1:
            raise DimensionMismatchError(f'Simple root {root} has no decomposition')
        return (i, j - 1), (j - 1, j)
