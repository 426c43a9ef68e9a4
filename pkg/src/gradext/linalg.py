"""Exact linear algebra over the rationals.

Matrices are stored densely (row-major lists of ``Fraction``).  Elimination
internally works on the nonzero entries of each row only, which keeps the
large but very sparse degree-wise realizations of module maps tractable.
"""

from __future__ import annotations

from bisect import insort
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def scalar_str(value: Fraction) -> str:
    """Render a scalar as ``"p/q"`` (or ``"p"`` when integral)."""
    value = as_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class KMatrix:
    """A dense matrix over Q."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows = [[as_scalar(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "KMatrix":
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "KMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def _from_trusted(cls, rows: list[list[Fraction]], ncols: int) -> "KMatrix":
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def transpose(self) -> "KMatrix":
        cols = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return KMatrix._from_trusted(cols, self.nrows)

    def __matmul__(self, other: "KMatrix") -> "KMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for row in self.rows:
            acc = [ZERO] * other.ncols
            for k, a in enumerate(row):
                if a:
                    orow = other.rows[k]
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return KMatrix._from_trusted(out, other.ncols)

    def apply(self, v: Sequence) -> list[Fraction]:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return [sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in self.rows]

    def is_zero(self) -> bool:
        return not any(x for row in self.rows for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"KMatrix({self.nrows}x{self.ncols})"


# -- sparse elimination kernel -------------------------------------------

def _sparse(row: Iterable) -> dict[int, Fraction]:
    return {j: as_scalar(x) for j, x in enumerate(row) if x}


class RowSpace:
    """Incrementally maintained echelon basis of a subspace of Q^n.

    Each stored row is monic at its pivot column and has no entries in
    columns that were pivots at the time it was stored.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._pivots: dict[int, dict[int, Fraction]] = {}
        self._order: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._order)

    @property
    def pivots(self) -> list[int]:
        return list(self._order)

    def _reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        pivots = self._pivots
        if len(row) < len(self._order):
            # walk the row's own columns in ascending order; eliminating a
            # pivot column only introduces larger columns
            done: set[int] = set()
            while True:
                cand = [c for c in row if c in pivots and c not in done]
                if not cand:
                    return row
                c = min(cand)
                done.add(c)
                _axpy(row, -row[c], pivots[c])
        for c in self._order:
            f = row.get(c)
            if f:
                _axpy(row, -f, pivots[c])
        return row

    def reduce(self, v: Sequence) -> dict[int, Fraction]:
        """Return the residue of ``v`` modulo the space, as a sparse dict."""
        return self._reduce(_sparse(v))

    def add_sparse(self, row: dict[int, Fraction]) -> bool:
        row = self._reduce(dict(row))
        if not row:
            return False
        c = min(row)
        inv = 1 / row[c]
        if inv != 1:
            for k in row:
                row[k] *= inv
        self._pivots[c] = row
        insort(self._order, c)
        return True

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return True iff it enlarged the space."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return self.add_sparse(_sparse(v))

    def __contains__(self, v: Sequence) -> bool:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return not self.reduce(v)

    def reduced_rows(self) -> list[tuple[int, dict[int, Fraction]]]:
        """Fully reduced (rref) rows as ``(pivot, sparse_row)`` pairs, pivot ascending."""
        pivset = set(self._order)
        done: dict[int, dict[int, Fraction]] = {}
        for c in reversed(self._order):
            row = dict(self._pivots[c])
            for k in sorted(k for k in row if k in pivset and k != c):
                f = row.get(k)
                if f:
                    _axpy(row, -f, done[k])
            done[c] = row
        return [(c, done[c]) for c in self._order]


def _axpy(row: dict[int, Fraction], f: Fraction, other: dict[int, Fraction]) -> None:
    """row += f * other, dropping zeros."""
    for k, v in other.items():
        new = row.get(k, ZERO) + f * v
        if new:
            row[k] = new
        else:
            row.pop(k, None)


def _rowspace(m: KMatrix) -> RowSpace:
    space = RowSpace(m.ncols)
    for row in m.rows:
        if space.dim == m.ncols:
            break
        space.add_sparse(_sparse(row))
    return space


# -- public operations ---------------------------------------------------

def rref(m: KMatrix) -> tuple[KMatrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    reduced = _rowspace(m).reduced_rows()
    rows = []
    for _, sp in reduced:
        dense = [ZERO] * m.ncols
        for k, v in sp.items():
            dense[k] = v
        rows.append(dense)
    rows.extend([ZERO] * m.ncols for _ in range(m.nrows - len(rows)))
    return KMatrix._from_trusted(rows, m.ncols), [c for c, _ in reduced]


def rank(m: KMatrix) -> int:
    return _rowspace(m).dim


def kernel_basis(m: KMatrix) -> list[list[Fraction]]:
    """Basis of {v : m v = 0}, one vector per non-pivot column, in column order."""
    reduced = _rowspace(m).reduced_rows()
    pivots = {c for c, _ in reduced}
    free = [j for j in range(m.ncols) if j not in pivots]
    # entries of rref rows on free columns, indexed by free column
    by_free: dict[int, list[tuple[int, Fraction]]] = {j: [] for j in free}
    for c, sp in reduced:
        for k, v in sp.items():
            if k != c:
                by_free[k].append((c, v))
    basis = []
    for j in free:
        v = [ZERO] * m.ncols
        v[j] = ONE
        for c, a in by_free[j]:
            v[c] = -a
        basis.append(v)
    return basis


def in_row_space(m: KMatrix, v: Sequence) -> bool:
    if len(v) != m.ncols:
        raise ValueError("vector length mismatch")
    return v in _rowspace(m)
