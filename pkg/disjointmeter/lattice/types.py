# -*- coding: utf-8 -*-
"""Value types of the exact lattice layer."""

from collections import namedtuple

from disjointmeter.exceptions import DimensionMismatch

__all__ = ["IntMatrix", "UnimodularMatrix"]


class IntMatrix(namedtuple("IntMatrix", ["rows", "cols", "entries"])):
    """
    Immutable integer matrix.

    Parameters and Attributes
    -------------------------
    rows: int
        Number of rows
    cols: int
        Number of columns
    entries: tuple of tuple of int
        Row-major entries, arbitrary precision
    """

    __slots__ = ()

    @classmethod
    def from_rows(cls, rows):
        """Build a matrix from an iterable of rows of integers."""
        entries = tuple(tuple(int(_) for _ in row) for row in rows)
        if not entries or not entries[0]:
            raise DimensionMismatch("matrix must have at least one entry")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise DimensionMismatch("ragged rows in matrix")
        return cls(rows=len(entries), cols=width, entries=entries)

    @classmethod
    def identity(cls, d):
        """d x d identity matrix."""
        return cls.from_rows([[int(i == j) for j in range(d)] for i in range(d)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls.from_rows([[0] * cols for _ in range(rows)])

    @property
    def is_square(self):
        return self.rows == self.cols

    def column(self, j):
        """tuple of int: j-th column."""
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        return IntMatrix.from_rows(zip(*self.entries))

    def __neg__(self):
        return IntMatrix.from_rows([[-_ for _ in row] for row in self.entries])

    def __matmul__(self, other):
        from .lattice import matmul

        return matmul(self, other)

    def tolist(self):
        """list of list of int: Mutable copy of entries."""
        return [list(row) for row in self.entries]


class UnimodularMatrix(namedtuple("UnimodularMatrix", ["matrix", "determinant"])):
    """
    Square integer matrix with determinant +1 or -1.

    Build with :func:`disjointmeter.lattice.as_unimodular`, which checks the
    determinant.

    Parameters and Attributes
    -------------------------
    matrix: IntMatrix
        The wrapped matrix
    determinant: int
        Either 1 or -1
    """

    __slots__ = ()

    @property
    def dimension(self):
        return self.matrix.rows
