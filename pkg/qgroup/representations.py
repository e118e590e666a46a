"""
Matrix representations of U_q(gl(n)) words.

``FundamentalRep`` is the vector representation, ``TrivialRep`` the
counit, and ``TensorRep(A, B)`` evaluates words through the coproduct

    D(e_i) = e_i (x) q^{h_i} + 1 (x) e_i
    D(f_i) = f_i (x) 1 + q^{-h_i} (x) f_i
    D(q^D) = q^D (x) q^D

so nested tensor representations give the iterated coproducts on
V^{(x)3} and beyond.
"""

import logging

from core.exceptions import DimensionMismatchError, FractionalExponentError
from linalg.sparse import SparseMatrix
from linalg.tensor import kron
from .cartan import CartanVector
from .words import Lower, QCommutator, QPower, Raise

logger = logging.getLogger('esoteric_rmatrix.qgroup')


class Representation:
    """
    Base class: subclasses provide ``dim``, ``weight`` and the simple
    generator images.
    """

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self._atom_cache = {}

    @property
    def dim(self):
        raise NotImplementedError

    def weight(self, index):
        """
        e_aa eigenvalues (a = 1..n) on basis vector ``index``.
        """
        raise NotImplementedError

    def _raise(self, i):
        raise NotImplementedError

    def _lower(self, i):
        raise NotImplementedError

    def identity(self):
        return SparseMatrix.identity(self.field, self.dim)

    def image(self, word):
        result = None
        for atom in word.atoms:
            matrix = self.atom_image(atom)
            result = matrix if result is None else result @ matrix
        if result is None:
            result = self.identity()
        if word.coefficient is not None:
            result = result.scale(word.coefficient)
        return result

    def atom_image(self, atom):
        if atom not in self._atom_cache:
            self._atom_cache[atom] = self._compute_atom(atom)
        return self._atom_cache[atom]

    def _compute_atom(self, atom):
        if isinstance(atom, Raise):
            self._check_simple(atom.index)
            return self._raise(atom.index)
        if isinstance(atom, Lower):
            self._check_simple(atom.index)
            return self._lower(atom.index)
        if isinstance(atom, QPower):
            return self.q_power(atom.exponent)
        if isinstance(atom, QCommutator):
            left, right = self.image(atom.left), self.image(atom.right)
            return left @ right - (right @ left).scale(self.field.q_power(atom.q_exp))
        raise TypeError(f'Unknown atom {atom!r}')

    def _check_simple(self, i):
        if not 1 <= i <= self.n - 1:
            raise DimensionMismatchError(f'Simple generator index {i} outside 1..{self.n - 1}')

    def q_power(self, vector):
        """
        q^D as a diagonal matrix; 2<D, weight> must be an integer (a power of s).
        """
        values = []
        for index in range(self.dim):
            exponent = 2 * vector.pair(self.weight(index))
            if exponent.denominator != 1:
                raise FractionalExponentError(
                    f'q^D has exponent q^{exponent / 2} on basis vector {index + 1}'
                )
            values.append(self.field.s_power(int(exponent)))
        return SparseMatrix.diagonal(self.field, values)


class FundamentalRep(Representation):
    """
    Vector representation of gl(n): e_i -> E_{i,i+1}, f_i -> E_{i+1,i}.

    ``overrides`` replaces generator images and exists for negative controls.
    """

    def __init__(self, field, n, overrides=None):
        super().__init__(field, n)
        self._atom_cache.update(overrides or {})

    @property
    def dim(self):
        return self.n

    def weight(self, index):
        return tuple(1 if a == index else 0 for a in range(self.n))

    def matrix_unit(self, i, j):
        return SparseMatrix.unit(self.field, self.n, i - 1, j - 1)

    def _raise(self, i):
        return self.matrix_unit(i, i + 1)

    def _lower(self, i):
        return self.matrix_unit(i + 1, i)

    def e(self, i):
        return self.atom_image(Raise(i))

    def f(self, i):
        return self.atom_image(Lower(i))


class TrivialRep(Representation):
    """
    One-dimensional counit representation: generators vanish, q^D -> 1.
    """

    @property
    def dim(self):
        return 1

    def weight(self, index):
        return (0,) * self.n

    def _raise(self, i):
        return SparseMatrix.zero(self.field, 1)

    def _lower(self, i):
        return SparseMatrix.zero(self.field, 1)


class TensorRep(Representation):
    """
    Representation A (x) B through the coproduct.
    """

    def __init__(self, first, second):
        if first.n != second.n:
            raise DimensionMismatchError(f'Cannot tensor gl({first.n}) with gl({second.n}) representations')
        super().__init__(first.field, first.n)
        self.first = first
        self.second = second

    @property
    def dim(self):
        return self.first.dim * self.second.dim

    def weight(self, index):
        left, right = divmod(index, self.second.dim)
        return tuple(a + b for a, b in zip(self.first.weight(left), self.second.weight(right)))

    def _raise(self, i):
        coroot = CartanVector.coroot(self.n, i)
        return (
            kron(self.first.atom_image(Raise(i)), self.second.q_power(coroot))
            + kron(self.first.identity(), self.second.atom_image(Raise(i)))
        )

    def _lower(self, i):
        coroot = CartanVector.coroot(self.n, i)
        return (
            kron(self.first.atom_image(Lower(i)), self.second.identity())
            + kron(self.first.q_power(-coroot), self.second.atom_image(Lower(i)))
        )


def fundamental_rep(rank, field):
    return FundamentalRep(field, 2 * rank + 1)
