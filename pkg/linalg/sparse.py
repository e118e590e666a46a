"""
Immutable sparse matrices over the coefficient field.

Entries are stored row-wise, zeros are never stored. Indices are 0-based
in memory; the JSON format shifts them to 1-based.
"""

from core.exceptions import DimensionMismatchError


class SparseMatrix:
    """
    Square sparse matrix with entries in a ``Field``.
    """
    __slots__ = ('field', 'dim', '_rows')

    def __init__(self, field, dim, rows=None):
        self.field = field
        self.dim = dim
        self._rows = rows or {}

    @classmethod
    def from_entries(cls, field, dim, entries):
        """
        Build from ((row, col), value) pairs; repeated positions are summed.
        """
        rows = {}
        for (row, col), value in entries:
            if not (0 <= row < dim and 0 <= col < dim):
                raise DimensionMismatchError(f'Entry ({row}, {col}) outside a {dim}-dimensional matrix')
            target = rows.setdefault(row, {})
            target[col] = target[col] + value if col in target else value
        return cls(field, dim, _pruned(rows))

    @classmethod
    def identity(cls, field, dim):
        """
        Identity matrix of size ``dim``.
        """
        return cls(field, dim, {i: {i: field.one} for i in range(dim)})

    @classmethod
    def zero(cls, field, dim):
        """Zero matrix of size ``dim``."""
        return cls(field, dim, {})

    @classmethod
    def unit(cls, field, dim, row, col, value=None):
        """
        Matrix unit at 0-based (row, col), scaled by ``value``.
        """
        value = field.one if value is None else value
        return cls.from_entries(field, dim, [((row, col), value)])

    @classmethod
    def diagonal(cls, field, values):
        """
        Diagonal matrix with the given entries.
        """
        values = list(values)
        return cls.from_entries(field, len(values), (((i, i), v) for i, v in enumerate(values)))

    # Access

    def rows(self):
        """
        (row index, {col: value}) pairs of the stored rows.
        """
        return self._rows.items()

    def row(self, index):
        return self._rows.get(index, {})

    def get(self, row, col):
        """
        Entry at 0-based (row, col); zero when not stored.
        """
        return self._rows.get(row, {}).get(col, self.field.zero)

    def entries(self):
        """
        All stored entries as ((row, col), value), sorted by position.
        """
        return [
            ((row, col), self._rows[row][col])
            for row in sorted(self._rows)
            for col in sorted(self._rows[row])
        ]

    @property
    def nnz(self):
        """Number of stored entries."""
        return sum(len(row) for row in self._rows.values())

    @property
    def is_zero(self):
        return not self._rows

    @property
    def is_diagonal(self):
        """
        True when every stored entry sits on the diagonal.
        """
        return all(set(row) == {index} for index, row in self._rows.items())

    # Arithmetic

    def _check_compatible(self, other):
        if not isinstance(other, SparseMatrix):
            raise TypeError(f'Expected SparseMatrix, got {type(other).__name__}')
        if self.dim != other.dim:
            raise DimensionMismatchError(f'Cannot combine {self.dim}- and {other.dim}-dimensional matrices')

    def __add__(self, other):
        self._check_compatible(other)
        rows = {index: dict(row) for index, row in self._rows.items()}
        for index, row in other._rows.items():
            target = rows.setdefault(index, {})
            for col, value in row.items():
                target[col] = target[col] + value if col in target else value
        return SparseMatrix(self.field, self.dim, _pruned(rows))

    def __neg__(self):
        return SparseMatrix(
            self.field,
            self.dim,
            {index: {col: -value for col, value in row.items()} for index, row in self._rows.items()},
        )

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        self._check_compatible(other)
        rows = {}
        for index, row in self._rows.items():
            accumulated = {}
            for middle, left in row.items():
                for col, right in other._rows.get(middle, {}).items():
                    product = left * right
                    accumulated[col] = accumulated[col] + product if col in accumulated else product
            accumulated = {col: value for col, value in accumulated.items() if value}
            if accumulated:
                rows[index] = accumulated
        return SparseMatrix(self.field, self.dim, rows)

    def __mul__(self, other):
        if isinstance(other, SparseMatrix):
            return self @ other
        return self.scale(other)

    def scale(self, factor):
        """
        Multiply every entry by a field element.
        """
        if not factor:
            return SparseMatrix.zero(self.field, self.dim)
        return SparseMatrix(
            self.field,
            self.dim,
            {index: {col: value * factor for col, value in row.items()} for index, row in self._rows.items()},
        )

    def map(self, function, field=None):
        """
        Apply ``function`` entrywise, optionally moving into another field.
        """
        target = field or self.field
        rows = {
            index: {col: function(value) for col, value in row.items()}
            for index, row in self._rows.items()
        }
        return SparseMatrix(target, self.dim, _pruned(rows))

    def specialize(self, numeric_field):
        """
        Evaluate a symbolic matrix at the assignment of ``numeric_field``.
        """
        return self.map(lambda value: self.field.specialize(value, numeric_field), field=numeric_field)

    def with_entry(self, row, col, value):
        """
        Copy with the entry at (row, col) replaced; a zero value removes it.
        """
        rows = {index: dict(entries) for index, entries in self._rows.items()}
        rows.setdefault(row, {})[col] = value
        return SparseMatrix(self.field, self.dim, _pruned(rows))

    # Comparison

    def first_difference(self, other):
        """
        First (row, col, mine, theirs) in sorted order where the matrices differ.
        """
        self._check_compatible(other)
        positions = set()
        for source in (self._rows, other._rows):
            for index, row in source.items():
                positions.update((index, col) for col in row)
        for row, col in sorted(positions):
            mine, theirs = self.get(row, col), other.get(row, col)
            if mine != theirs:
                return row, col, mine, theirs
        return None

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix) or self.dim != other.dim:
            return False
        return self._rows == other._rows

    def __hash__(self):
        return hash((self.dim, tuple(self.entries())))

    def __repr__(self):
        return f'SparseMatrix(dim={self.dim}, nnz={self.nnz})'


def _pruned(rows):
    cleaned = {}
    for index, row in rows.items():
        kept = {col: value for col, value in row.items() if value}
        if kept:
            cleaned[index] = kept
    return cleaned
