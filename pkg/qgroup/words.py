"""
Formal words in the generators of U_q(gl(n)).

A word is a coefficient times an ordered product of atoms:

* ``Raise(i)`` and ``Lower(i)`` are the Chevalley generators e_i, f_i;
* ``QPower(D)`` is the group-like q^D for a Cartan vector D;
* ``QCommutator(x, y, k)`` stands for x y - q^k y x with words x, y, which
  is how composite root vectors are built.

Words carry no matrices; a representation turns them into matrices.
"""

from dataclasses import dataclass

from .cartan import CartanVector
from .roots import RootDatum


@dataclass(frozen=True)
class Raise:
    index: int


@dataclass(frozen=True)
class Lower:
    index: int


@dataclass(frozen=True)
class QPower:
    exponent: CartanVector


@dataclass(frozen=True)
class QCommutator:
    left: 'Word'
    right: 'Word'
    q_exp: int


@dataclass(frozen=True)
class Word:
    # None stands for the coefficient 1 so that words stay field-independent
    coefficient: object
    atoms: tuple

    def __mul__(self, other):
        if self.coefficient is None:
            coefficient = other.coefficient
        elif other.coefficient is None:
            coefficient = self.coefficient
        else:
            coefficient = self.coefficient * other.coefficient
        return Word(coefficient, self.atoms + other.atoms)

    def scaled(self, factor):
        coefficient = factor if self.coefficient is None else self.coefficient * factor
        return Word(coefficient, self.atoms)


def word(*atoms, coefficient=None):
    return Word(coefficient, tuple(atoms))


def e(i):
    return word(Raise(i))


def f(i):
    return word(Lower(i))


def q_power(vector):
    return word(QPower(vector))


def q_commutator(left, right, q_exp, coefficient=None):
    return word(QCommutator(left, right, q_exp), coefficient=coefficient)


def root_e(root):
    """
    e_(i,j) = e_(i,j-1) e_(j-1,j) - q e_(j-1,j) e_(i,j-1).
    """
    if RootDatum.is_simple(root):
        return e(root[0])
    alpha, beta = RootDatum.split(root)
    return q_commutator(root_e(alpha), root_e(beta), 1)


def root_f(root):
    """
    f_(i,j) = f_(j-1,j) f_(i,j-1) - q^-1 f_(i,j-1) f_(j-1,j).
    """
    if RootDatum.is_simple(root):
        return f(root[0])
    alpha, beta = RootDatum.split(root)
    return q_commutator(root_f(beta), root_f(alpha), -1)


def root_g(datum, root, lower=None):
    """
    g_{alpha'} for a positive root alpha of sl(N+1).

    Simple roots give ``lower(k)``, by default f_{k'}; composites follow
    g_{(a+b)'} = g_{b'} g_{a'} - q^-1 g_{a'} g_{b'}.
    """
    lower = lower or (lambda k: f(datum.prime_simple(k)))
    if RootDatum.is_simple(root):
        return lower(root[0])
    alpha, beta = RootDatum.split(root)
    return q_commutator(root_g(datum, beta, lower), root_g(datum, alpha, lower), -1)
