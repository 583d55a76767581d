"""Exact dense linear algebra over the rationals.

Every entry is a :class:`fractions.Fraction`, so ranks, kernels and solves are
exact.  Elimination works on sparse row dictionaries internally because the
operators built elsewhere in the package (ad-matrices, form equations) are
mostly zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction
Vector = tuple  # tuple of Fraction


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_frac(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n: int):
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence):
        n = len(values)
        out = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            out[i * n + i] = _frac(v)
        return cls(n, n, out)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None):
        if rows is None:
            rows = len(columns[0]) if columns else 0
        ncols = len(columns)
        out = [Fraction(0)] * (rows * ncols)
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise DimensionError("ragged columns")
            for i, x in enumerate(col):
                out[i * ncols + j] = x
        return cls(rows, ncols, out)

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              [self.entries[i * self.cols + j]
                               for j in range(self.cols) for i in range(self.rows)])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        return all(x == 0 for k, x in enumerate(self.entries)
                   if k // self.cols != k % self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        c = self.cols
        e = self.entries
        return RationalMatrix(len(rows), len(cols),
                              [e[i * c + j] for i in rows for j in cols])

    def _check_same(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"{self.shape} vs {other.shape}")
        return None

    def __add__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return RationalMatrix(self.rows, self.cols,
                              [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return RationalMatrix(self.rows, self.cols,
                              [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return RationalMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [Fraction(0)] * (n * m)
        for i in range(n):
            base = i * m
            for t in range(k):
                x = a[i * k + t]
                if x:
                    brow = t * m
                    for j in range(m):
                        y = b[brow + j]
                        if y:
                            out[base + j] += x * y
        return RationalMatrix(n, m, out)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        c = self.cols
        e = self.entries
        nz = [(j, _frac(x)) for j, x in enumerate(v) if x]
        return tuple(sum((e[i * c + j] * x for j, x in nz), Fraction(0))
                     for i in range(self.rows))

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def vstack(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionError("vstack needs equal column counts")
    return RationalMatrix(sum(b.rows for b in blocks), cols,
                          [x for b in blocks for x in b.entries])


def hstack(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionError("hstack needs equal row counts")
    return RationalMatrix.from_rows(
        [[x for b in blocks for x in b.row(i)] for i in range(rows)])


# -- elimination --------------------------------------------------------------

def _sparse_rows(M: RationalMatrix):
    c = M.cols
    e = M.entries
    rows = []
    for i in range(M.rows):
        r = {j: e[i * c + j] for j in range(c) if e[i * c + j]}
        if r:
            rows.append(r)
    return rows


def _reduce(rows, ncols):
    """Reduced row echelon form of sparse rows.

    Pivot is the first nonzero entry in column order.  Returns the list of
    pivot rows (normalized to leading 1) and their pivot columns.
    """
    pivots = []  # list of (col, row)
    remaining = list(rows)
    for col in range(ncols):
        if not remaining:
            break
        idx = next((k for k, r in enumerate(remaining) if col in r), None)
        if idx is None:
            continue
        prow = remaining.pop(idx)
        inv = 1 / prow[col]
        prow = {j: x * inv for j, x in prow.items()}
        nxt = []
        for r in remaining:
            x = r.get(col)
            if x:
                r = dict(r)
                for j, y in prow.items():
                    v = r.get(j, 0) - x * y
                    if v:
                        r[j] = v
                    else:
                        r.pop(j, None)
                if not r:
                    continue
            nxt.append(r)
        remaining = nxt
        pivots.append((col, prow))
    # back substitution
    for k in range(len(pivots) - 1, -1, -1):
        col, prow = pivots[k]
        for t in range(k):
            c2, r2 = pivots[t]
            x = r2.get(col)
            if x:
                for j, y in prow.items():
                    v = r2.get(j, 0) - x * y
                    if v:
                        r2[j] = v
                    else:
                        r2.pop(j, None)
    return pivots


def rank(M: RationalMatrix) -> int:
    """Rank over Q."""
    return len(_reduce(_sparse_rows(M), M.cols))


def rref(M: RationalMatrix):
    """Return ``(R, pivot_columns)`` with ``R`` the reduced row echelon form."""
    piv = _reduce(_sparse_rows(M), M.cols)
    rows = [[r.get(j, Fraction(0)) for j in range(M.cols)] for _, r in piv]
    rows += [[Fraction(0)] * M.cols for _ in range(M.rows - len(rows))]
    return RationalMatrix.from_rows(rows, M.cols), [c for c, _ in piv]


def kernel_basis(M: RationalMatrix) -> list:
    """Basis of the right null space ``{v : Mv = 0}`` as tuples of Fractions."""
    piv = _reduce(_sparse_rows(M), M.cols)
    pivcols = {c for c, _ in piv}
    basis = []
    for free in range(M.cols):
        if free in pivcols:
            continue
        v = [Fraction(0)] * M.cols
        v[free] = Fraction(1)
        for c, r in piv:
            x = r.get(free)
            if x:
                v[c] = -x
        basis.append(tuple(v))
    return basis


def solve(M: RationalMatrix, b: Sequence) -> Optional[Vector]:
    """Some ``x`` with ``Mx = b``, or ``None`` when the system is inconsistent.

    Raises :class:`DimensionError` if ``len(b) != M.rows``.
    """
    if len(b) != M.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {M.rows}")
    n = M.cols
    rows = []
    for i, r in enumerate(_sparse_rows_all(M)):
        bi = _frac(b[i])
        if bi:
            r[n] = bi
        if r:
            rows.append(r)
    piv = _reduce(rows, n + 1)
    x = [Fraction(0)] * n
    for c, r in piv:
        if c == n:
            return None
        x[c] = r.get(n, Fraction(0))
    return tuple(x)


def _sparse_rows_all(M):
    c = M.cols
    e = M.entries
    return [{j: e[i * c + j] for j in range(c) if e[i * c + j]} for i in range(M.rows)]


class Span:
    """Subspace of Q^n spanned by given vectors, with a membership test."""

    def __init__(self, vectors: Iterable[Sequence], dim: int):
        self.dim = dim
        rows = [{j: _frac(x) for j, x in enumerate(v) if x} for v in vectors]
        self._pivots = _reduce([r for r in rows if r], dim)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def __contains__(self, v: Sequence) -> bool:
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} in a span of Q^{self.dim}")
        r = {j: _frac(x) for j, x in enumerate(v) if x}
        for c, prow in self._pivots:
            x = r.get(c)
            if x:
                for j, y in prow.items():
                    val = r.get(j, 0) - x * y
                    if val:
                        r[j] = val
                    else:
                        r.pop(j, None)
        return not r
