"""
Diagonal (Cartan) elements of gl(n) as rational combinations of e_aa.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class CartanVector:
    """
    sum_a c_a e_aa with rational c_a; ``coefficients[a-1]`` is c_a.
    """
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(Fraction(c) for c in self.coefficients))

    @property
    def n(self):
        return len(self.coefficients)

    @classmethod
    def from_mapping(cls, n, mapping):
        values = [Fraction(0)] * n
        for index, value in mapping.items():
            values[index - 1] += Fraction(value)
        return cls(tuple(values))

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    @classmethod
    def unit(cls, n, a):
        return cls.from_mapping(n, {a: 1})

    @classmethod
    def coroot(cls, n, i):
        """h_i = e_ii - e_{i+1,i+1}."""
        return cls.from_mapping(n, {i: 1, i + 1: -1})

    @classmethod
    def central(cls, n):
        return cls((1,) * n)

    @classmethod
    def top(cls, n, k):
        """H_k = e_11 + ... + e_kk."""
        return cls.from_mapping(n, {a: 1 for a in range(1, k + 1)})

    @classmethod
    def bottom(cls, n, m):
        """Z_m, the sum of the last m diagonal units."""
        return cls.from_mapping(n, {a: 1 for a in range(n + 1 - m, n + 1)})

    @classmethod
    def priming_difference(cls, n, i):
        """e_ii - e_{i'i'} with i' = n + 1 - i."""
        return cls.from_mapping(n, {i: 1, n + 1 - i: -1})

    def pair(self, weight):
        return sum((c * w for c, w in zip(self.coefficients, weight)), Fraction(0))

    def __add__(self, other):
        return CartanVector(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self):
        return CartanVector(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, factor):
        factor = Fraction(factor)
        return CartanVector(tuple(c * factor for c in self.coefficients))

    __rmul__ = __mul__

    def to_strings(self):
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_strings(cls, values):
        return cls(tuple(Fraction(value) for value in values))
