"""Exact linear algebra over Q: rank, kernel, image, solving, quotients.

Matrices are dense tuples of Fractions.  Row reduction goes through the
fraction-free integer kernel in cdga._core (compiled when available); rows
are scaled to integers first and pivot rows are rescaled back at the end.
Pivot choice is always the first nonzero entry in column order, so every
derived basis is deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ._core import rref_int
from .errors import DimensionMismatch, NoSolution


def _to_int_row(row):
    denlcm = 1
    for x in row:
        denlcm = denlcm * x.denominator // math.gcd(denlcm, x.denominator)
    return [x.numerator * (denlcm // x.denominator) for x in row]


def rref_rows(rows, ncols):
    """RREF of a list of Fraction rows: (rows, pivots), zero rows dropped."""
    if not rows:
        return [], []
    introws = [_to_int_row(r) for r in rows]
    reduced, pivots = rref_int(introws, ncols)
    out = []
    for r, c in enumerate(pivots):
        p = reduced[r][c]
        out.append(tuple(Fraction(x, p) for x in reduced[r]))
    return out, pivots


class Matrix:
    """An immutable rows x cols matrix of rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        rows = [tuple(x if type(x) is Fraction else Fraction(x) for x in row)
                for row in data]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise DimensionMismatch("ragged rows")
        elif cols is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        self.rows = len(rows)
        self.cols = cols
        self.data = tuple(rows)

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)], cols=n)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.cols == other.cols
                and self.data == other.data)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def transpose(self):
        return Matrix([[self.data[r][c] for r in range(self.rows)]
                       for c in range(self.cols)], cols=self.rows)

    def apply(self, v):
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} != cols {self.cols}")
        return tuple(sum((row[j] * v[j] for j in range(self.cols)), Fraction(0))
                     for row in self.data)

    def rref(self):
        rows, pivots = rref_rows(list(self.data), self.cols)
        return Matrix(rows, cols=self.cols), pivots

    def rank(self):
        _, pivots = self.rref()
        return len(pivots)

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self):
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.data[i]) + [Fraction(i == j) for j in range(n)]
               for i in range(n)]
        rows, pivots = rref_rows(aug, 2 * n)
        if pivots[:n] != list(range(n)):
            raise NoSolution("matrix is singular")
        return Matrix([r[n:] for r in rows], cols=n)

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions disagree")
        ot = other.transpose()
        return Matrix([[sum((a * b for a, b in zip(row, col)), Fraction(0))
                        for col in ot.data] for row in self.data],
                      cols=other.cols)


class Subspace:
    """A subspace of Q^n, stored as an RREF row basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        rows, pivots = rref_rows(
            [tuple(x if type(x) is Fraction else Fraction(x) for x in v)
             for v in vectors], ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector length != ambient dimension")
        self.basis = tuple(rows)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, v):
        """Residual of v after eliminating the pivot coordinates."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length != ambient dimension")
        w = [x if type(x) is Fraction else Fraction(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for j, rj in enumerate(row):
                    if rj:
                        w[j] -= c * rj
        return tuple(w)

    def member(self, v):
        return not any(self.reduce(v))

    def coordinates(self, v):
        """Coefficients of v on the RREF basis; raises if v is outside."""
        coeffs = [Fraction(v[p]) for p in self.pivots]
        if not self.member(v):
            raise NoSolution("vector is not in the subspace")
        return tuple(coeffs)

    def sum(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces of different ambient spaces")
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def contains(self, other):
        return all(self.member(v) for v in other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def kernel(m: Matrix) -> Subspace:
    """Null space of m, as a subspace of Q^cols."""
    rref, pivots = m.rref()
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    vectors = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref.data[r][fc]
        vectors.append(v)
    return Subspace(m.cols, vectors)


def image(m: Matrix) -> Subspace:
    """Column space of m, as a subspace of Q^rows."""
    return Subspace(m.rows, [tuple(row) for row in m.transpose().data])


def solve(m: Matrix, b):
    """One solution of m x = b (free variables set to 0); NoSolution if none."""
    if len(b) != m.rows:
        raise DimensionMismatch(f"rhs length {len(b)} != rows {m.rows}")
    aug = [list(m.data[r]) + [Fraction(b[r])] for r in range(m.rows)]
    rows, pivots = rref_rows(aug, m.cols + 1)
    if m.cols in pivots:
        raise NoSolution("inconsistent system")
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)


class LinearSolver:
    """Repeated solving of m x = b: the elimination is done once on [m | I].

    Solutions match solve(): free variables are set to zero.
    """

    def __init__(self, m: Matrix):
        self.rows = m.rows
        self.cols = m.cols
        aug = [list(m.data[r]) + [Fraction(r == j) for j in range(m.rows)]
               for r in range(m.rows)]
        reduced, pivots = rref_rows(aug, m.cols + m.rows)
        # pivot in the m-part: row combination giving that coordinate of x;
        # pivot in the I-part: the m-part is zero, so the combination spans
        # the left null space and yields a consistency constraint on b
        self._pivot_rows = [(pc, row[m.cols:])
                            for row, pc in zip(reduced, pivots) if pc < m.cols]
        self._null_rows = [row[m.cols:]
                           for row, pc in zip(reduced, pivots) if pc >= m.cols]

    def solve(self, b):
        if len(b) != self.rows:
            raise DimensionMismatch(f"rhs length {len(b)} != rows {self.rows}")
        for u in self._null_rows:
            if sum((c * b[j] for j, c in enumerate(u) if c), Fraction(0)):
                raise NoSolution("inconsistent system")
        x = [Fraction(0)] * self.cols
        for pc, u in self._pivot_rows:
            x[pc] = sum((c * b[j] for j, c in enumerate(u) if c), Fraction(0))
        return tuple(x)


def quotient_basis(ambient: Subspace, sub: Subspace):
    """Coset representatives completing sub to ambient, deterministically.

    Representatives are drawn from ambient's RREF basis, in order, keeping
    those that add rank over sub.
    """
    if ambient.ambient_dim != sub.ambient_dim:
        raise DimensionMismatch("subspaces of different ambient spaces")
    if not ambient.contains(sub):
        raise DimensionMismatch("sub is not contained in ambient")
    reps = []
    span = sub
    for v in ambient.basis:
        if not span.member(v):
            reps.append(v)
            span = Subspace(span.ambient_dim, span.basis + (v,))
    return reps


def member(s: Subspace, v) -> bool:
    return s.member(v)
