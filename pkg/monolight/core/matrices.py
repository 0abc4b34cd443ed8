#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exact integer matrices and the Smith normal form.

Entries are Python ``int`` objects held in ``numpy`` arrays of ``object``
dtype, so nothing ever overflows.
"""
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy


__all__ = [
    'IntMatrix',
    'SmithForm',
    'LatticeSolver',
    'smith_normal_form',
    'integer_nullspace',
    'solve_left_modulo',
]


class IntMatrix:
    """
    An immutable ``rows x cols`` matrix of arbitrary precision integers.

    Args:
        rows: the number of rows
        cols: the number of columns
        entries: ``rows * cols`` integers in row-major order

    Raises:
        ValueError: the number of entries is not ``rows * cols``
    """

    __slots__ = ('_data', '__weakref__')

    def __init__(self, rows: int, cols: int, entries: Iterable[int] = ()):
        values = [int(x) for x in entries]
        if not values and rows * cols:
            values = [0] * (rows * cols)
        if len(values) != rows * cols:
            raise ValueError(f'a {rows}x{cols} matrix needs {rows * cols} entries, got {len(values)}')
        data = np.empty((rows, cols), dtype=object)
        for index, value in enumerate(values):
            data[index // cols, index % cols] = value
        data.flags.writeable = False
        self._data = data

    # Constructors

    @classmethod
    def _wrap(cls, data: np.ndarray) -> "IntMatrix":
        matrix = cls.__new__(cls)
        data = np.array(data, dtype=object)
        data.flags.writeable = False
        matrix._data = data
        return matrix

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        """
        Build a matrix from a list of rows.  ``cols`` is only needed when
        there are no rows to infer it from.
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError('all rows must have the same length')
        return cls(len(rows), cols, [x for row in rows for x in row])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: Optional[int] = None) -> "IntMatrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([list(col) for col in columns], cols=rows).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: Optional[int] = None, cols: Optional[int] = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        matrix = np.zeros((rows, cols), dtype=object)
        for i, value in enumerate(values):
            matrix[i, i] = int(value)
        return cls._wrap(matrix)

    # Shape and access

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def entries(self) -> Tuple[int, ...]:
        """
        All entries in row-major order.
        """
        return tuple(self._data.flatten().tolist())

    def __getitem__(self, index: Tuple[int, int]) -> int:
        return self._data[index]

    def row(self, i: int) -> Tuple[int, ...]:
        return tuple(self._data[i, :].tolist())

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self._data[:, j].tolist())

    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "IntMatrix":
        data = self._data[np.ix_(list(rows), list(cols))] if rows and cols else np.zeros((len(rows), len(cols)))
        return self._wrap(data)

    def top(self, n: int) -> "IntMatrix":
        return self.submatrix(range(n), range(self.cols))

    def bottom(self, n: int) -> "IntMatrix":
        return self.submatrix(range(self.rows - n, self.rows), range(self.cols))

    # Arithmetic

    def transpose(self) -> "IntMatrix":
        return self._wrap(self._data.T)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f'cannot multiply {self.shape} by {other.shape}')
        if self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return self._wrap(self._data.dot(other._data))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f'cannot add {self.shape} to {other.shape}')
        return self._wrap(self._data + other._data)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f'cannot subtract {other.shape} from {self.shape}')
        return self._wrap(self._data - other._data)

    def __neg__(self) -> "IntMatrix":
        return self._wrap(-self._data)

    def scale(self, k: int) -> "IntMatrix":
        return self._wrap(self._data * int(k))

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        blocks = [self] + list(others)
        rows = {block.rows for block in blocks}
        if len(rows) != 1:
            raise ValueError('hstack needs matching row counts')
        n = rows.pop()
        return self._wrap(np.concatenate([block._data.reshape(n, block.cols) for block in blocks], axis=1))

    def vstack(self, *others: "IntMatrix") -> "IntMatrix":
        blocks = [self] + list(others)
        cols = {block.cols for block in blocks}
        if len(cols) != 1:
            raise ValueError('vstack needs matching column counts')
        n = cols.pop()
        return self._wrap(np.concatenate([block._data.reshape(block.rows, n) for block in blocks], axis=0))

    def block_diagonal(self, other: "IntMatrix") -> "IntMatrix":
        upper = self.hstack(IntMatrix.zeros(self.rows, other.cols))
        lower = IntMatrix.zeros(other.rows, self.cols).hstack(other)
        return upper.vstack(lower)

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        if not (self.rows and self.cols and other.rows and other.cols):
            return IntMatrix.zeros(self.rows * other.rows, self.cols * other.cols)
        return self._wrap(np.kron(self._data, other._data))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def determinant(self) -> int:
        """
        The exact determinant of a square matrix.
        """
        if self.rows != self.cols:
            raise ValueError('determinant of a non-square matrix')
        if self.rows == 0:
            return 1
        return int(self.to_sympy().det())

    def inverse(self) -> "IntMatrix":
        """
        The inverse of a unimodular matrix.

        Raises:
            ValueError: the matrix is not unimodular
        """
        if abs(self.determinant()) != 1:
            raise ValueError('only unimodular integer matrices have integer inverses')
        if self.rows == 0:
            return self
        inverse = self.to_sympy().inv()
        return IntMatrix.from_rows([[int(x) for x in inverse.row(i)] for i in range(self.rows)], cols=self.cols)

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.rows, self.cols, list(self.entries))

    # Comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f'IntMatrix({self.rows}, {self.cols}, {list(self.entries)})'


# --------------------------------------------
# Smith normal form
# --------------------------------------------

class SmithForm:
    """
    The output of :py:func:`smith_normal_form`: ``S = U * M * V``.

    Args:
        S: the diagonal matrix
        U: the unimodular row transform
        V: the unimodular column transform
    """

    def __init__(self, S: IntMatrix, U: IntMatrix, V: IntMatrix):
        self.S = S
        self.U = U
        self.V = V

    def __iter__(self):
        return iter((self.S, self.U, self.V))

    @cached_property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.S[i, i] for i in range(min(self.S.rows, self.S.cols)))

    @cached_property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _swap_rows(m: List[List[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: List[List[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: List[List[int]], target: int, source: int, k: int) -> None:
    # row[target] += k * row[source]
    src = m[source]
    m[target] = [a + k * b for a, b in zip(m[target], src)]


def _add_col(m: List[List[int]], target: int, source: int, k: int) -> None:
    for row in m:
        row[target] += k * row[source]


def _identity_rows(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """
    Diagonalise ``M`` by unimodular row and column operations.

    The pivot loop moves the smallest non-zero entry of the remaining block
    into the corner, clears its row and column, and folds any entry the
    pivot does not divide back into the pivot row until it does.

    Args:
        M: any integer matrix

    Returns:
        ``S``, ``U`` and ``V`` with ``S = U * M * V``, ``U`` and ``V``
        unimodular and ``S`` diagonal with ``d_i | d_{i+1}`` and ``d_i >= 0``.
    """
    m, n = M.rows, M.cols
    S = M.tolist()
    U = _identity_rows(m)
    V = _identity_rows(n)

    def smallest(rows: Iterable[int], cols: Iterable[int]) -> Optional[Tuple[int, int]]:
        best = None
        cols = list(cols)
        for i in rows:
            for j in cols:
                if S[i][j] != 0 and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        return best

    def move_to_corner(t: int, position: Tuple[int, int]) -> None:
        i, j = position
        if i != t:
            _swap_rows(S, i, t)
            _swap_rows(U, i, t)
        if j != t:
            _swap_cols(S, j, t)
            _swap_cols(V, j, t)

    for t in range(min(m, n)):
        position = smallest(range(t, m), range(t, n))
        if position is None:
            break
        move_to_corner(t, position)
        while True:
            pivot = S[t][t]
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // pivot
                    _add_row(S, i, t, -q)
                    _add_row(U, i, t, -q)
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // pivot
                    _add_col(S, j, t, -q)
                    _add_col(V, j, t, -q)
            remainder = smallest(range(t + 1, m), [t]) or smallest([t], range(t + 1, n))
            if remainder is not None:
                move_to_corner(t, remainder)
                continue
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(S, t, offender, 1)
            _add_row(U, t, offender, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]

    return SmithForm(
        IntMatrix.from_rows(S, cols=n),
        IntMatrix.from_rows(U, cols=m),
        IntMatrix.from_rows(V, cols=n),
    )


class LatticeSolver:
    """
    Solve ``M x = v`` over the integers for many right hand sides ``v``,
    reusing one Smith normal form of ``M``.

    Args:
        M: the matrix whose column lattice we test membership in
    """

    def __init__(self, M: IntMatrix):
        self.M = M
        self.smith = smith_normal_form(M)
        self._U = self.smith.U.tolist()
        self._V = self.smith.V.tolist()
        self._d = list(self.smith.diagonal)
        self._rank = self.smith.rank

    def solve(self, v: Sequence[int]) -> Optional[Tuple[int, ...]]:
        """
        Return one integer solution of ``M x = v``, or ``None`` if ``v`` is
        not in the column lattice of ``M``.
        """
        m, n = self.M.rows, self.M.cols
        if len(v) != m:
            raise ValueError(f'expected a vector of length {m}')
        y = [sum(u * x for u, x in zip(row, v)) for row in self._U]
        z = [0] * n
        for i in range(m):
            if i < self._rank:
                if y[i] % self._d[i]:
                    return None
                z[i] = y[i] // self._d[i]
            elif y[i] != 0:
                return None
        return tuple(sum(self._V[i][j] * z[j] for j in range(self._rank)) for i in range(n))

    def contains(self, v: Sequence[int]) -> bool:
        return self.solve(v) is not None

    def solve_columns(self, B: IntMatrix) -> Optional[IntMatrix]:
        """
        Solve ``M X = B`` column by column.

        Returns:
            ``X``, or ``None`` if some column of ``B`` is not in the lattice.
        """
        columns = []
        for column in B.columns():
            x = self.solve(column)
            if x is None:
                return None
            columns.append(x)
        if not columns:
            return IntMatrix.zeros(self.M.cols, 0)
        return IntMatrix.from_columns(columns, rows=self.M.cols)


def integer_nullspace(M: IntMatrix) -> IntMatrix:
    """
    A basis of ``{x : M x = 0}`` as the columns of the returned matrix.
    """
    smith = smith_normal_form(M)
    keep = list(range(smith.rank, M.cols))
    return smith.V.submatrix(range(M.cols), keep) if keep else IntMatrix.zeros(M.cols, 0)


def solve_left_modulo(P: IntMatrix, F: IntMatrix, R: IntMatrix) -> Optional[IntMatrix]:
    """
    Find ``X`` with ``X P = F`` modulo the column lattice of ``R``.

    ``P`` is ``q x n``, ``F`` is ``b x n`` and ``R`` is ``b x k``; the answer
    is ``b x q``.  The unknowns are flattened column-major so the system is
    ``(P^T (x) I_b) vec(X) - (I_n (x) R) vec(Y) = vec(F)``.
    """
    q, n = P.shape
    b = F.rows
    if b == 0 or q == 0:
        if F.is_zero() or (b and R.cols and LatticeSolver(R).solve_columns(F) is not None):
            return IntMatrix.zeros(b, q)
        return None
    system = P.T.kron(IntMatrix.identity(b)).hstack(-IntMatrix.identity(n).kron(R))
    target = [F[i, j] for j in range(n) for i in range(b)]
    if system.rows == 0:
        return IntMatrix.zeros(b, q)
    solution = LatticeSolver(system).solve(target)
    if solution is None:
        return None
    vec_x = solution[:b * q]
    return IntMatrix.from_rows([[vec_x[j * b + i] for j in range(q)] for i in range(b)], cols=q)
