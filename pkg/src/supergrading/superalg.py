"""gl(m|n) and its orthosymplectic subalgebras as concrete matrix superalgebras.

Basis conventions: indices are 0-based; ``0..m-1`` span the even space V0 and
``m..m+n-1`` the odd space V1.  The unit ``E_ab`` has parity ``|a| + |b|``.
Operators on gl(m|n) are written in the unit basis ordered row-major, so
``E_ab`` is coordinate ``a*(m+n) + b``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .exactmat import DimensionError, RationalMatrix, kernel_basis, rank


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True)
class SuperDim:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"invalid superdimension ({self.m}|{self.n})")

    @property
    def size(self) -> int:
        return self.m + self.n

    def index_parity(self, a: int) -> Parity:
        if not 0 <= a < self.size:
            raise IndexError(f"basis index {a} out of range for gl({self.m}|{self.n})")
        return Parity.EVEN if a < self.m else Parity.ODD

    def __str__(self):
        return f"({self.m}|{self.n})"


def unit_parity(dim: SuperDim, a: int, b: int) -> Parity:
    """Parity of the matrix unit ``E_ab``."""
    return dim.index_parity(a) + dim.index_parity(b)


def _block_parity(entries: RationalMatrix, m: int) -> Optional[Parity]:
    """Parity of a matrix from its support; ``None`` if it mixes blocks."""
    N = entries.rows
    even = odd = False
    for k, x in enumerate(entries.entries):
        if x:
            a, b = divmod(k, N)
            if (a < m) == (b < m):
                even = True
            else:
                odd = True
    if even and odd:
        return None
    return Parity.ODD if odd else Parity.EVEN


@dataclass(frozen=True)
class SuperMatrix:
    """An element of gl(m|n).

    ``parity`` is an optional tag; when given it is checked against the
    block structure of ``entries``.
    """

    dim: SuperDim
    entries: RationalMatrix
    parity: Optional[Parity] = field(default=None, compare=False)

    def __post_init__(self):
        N = self.dim.size
        if self.entries.shape != (N, N):
            raise DimensionError(f"{self.entries.shape} entries for gl{self.dim}")
        if self.parity is not None:
            actual = _block_parity(self.entries, self.dim.m)
            if self.entries.is_zero():
                actual = self.parity
            if actual != self.parity:
                raise ValueError(f"entries are not homogeneous of parity {self.parity}")

    @classmethod
    def from_rows(cls, dim: SuperDim, rows, parity: Optional[Parity] = None):
        return cls(dim, RationalMatrix.from_rows(rows, dim.size), parity)

    @classmethod
    def zero(cls, dim: SuperDim):
        return cls(dim, RationalMatrix.zeros(dim.size, dim.size), Parity.EVEN)

    @classmethod
    def identity(cls, dim: SuperDim):
        return cls(dim, RationalMatrix.identity(dim.size), Parity.EVEN)

    @classmethod
    def unit(cls, dim: SuperDim, a: int, b: int):
        N = dim.size
        e = [0] * (N * N)
        e[a * N + b] = 1
        return cls(dim, RationalMatrix(N, N, e), unit_parity(dim, a, b))

    @classmethod
    def diagonal(cls, dim: SuperDim, values: Sequence):
        return cls(dim, RationalMatrix.diagonal(values), Parity.EVEN)

    @classmethod
    def from_vector(cls, dim: SuperDim, vec: Sequence, parity: Optional[Parity] = None):
        N = dim.size
        return cls(dim, RationalMatrix(N, N, vec), parity)

    def __getitem__(self, ab):
        return self.entries[ab]

    def vector(self) -> tuple:
        """Coordinates in the row-major unit basis."""
        return self.entries.entries

    def homogeneous_parity(self) -> Optional[Parity]:
        if self.parity is not None:
            return self.parity
        return _block_parity(self.entries, self.dim.m)

    def part(self, parity: Parity) -> "SuperMatrix":
        N, m = self.dim.size, self.dim.m
        out = [x if ((a < m) == (b < m)) == (parity == Parity.EVEN) else Fraction(0)
               for k, x in enumerate(self.entries.entries)
               for a, b in [divmod(k, N)]]
        return SuperMatrix(self.dim, RationalMatrix(N, N, out), parity)

    def even_part(self) -> "SuperMatrix":
        return self.part(Parity.EVEN)

    def odd_part(self) -> "SuperMatrix":
        return self.part(Parity.ODD)

    def is_zero(self) -> bool:
        return self.entries.is_zero()

    def _check(self, other):
        if not isinstance(other, SuperMatrix):
            return False
        if other.dim != self.dim:
            raise DimensionError(f"gl{self.dim} vs gl{other.dim}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        p = self.parity if self.parity == other.parity else None
        return SuperMatrix(self.dim, self.entries + other.entries, p)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        p = self.parity if self.parity == other.parity else None
        return SuperMatrix(self.dim, self.entries - other.entries, p)

    def __neg__(self):
        return SuperMatrix(self.dim, -self.entries, self.parity)

    def scale(self, c) -> "SuperMatrix":
        return SuperMatrix(self.dim, self.entries.scale(c), self.parity)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __matmul__(self, other):
        """Plain matrix product (not the bracket)."""
        if not self._check(other):
            return NotImplemented
        p = None
        if self.parity is not None and other.parity is not None:
            p = self.parity + other.parity
        return SuperMatrix(self.dim, self.entries @ other.entries, p)

    def __repr__(self):
        tag = f", {self.parity}" if self.parity is not None else ""
        return f"SuperMatrix(gl{self.dim}{tag}, {self.entries.tolist()})"


def _homogeneous_parts(x: SuperMatrix):
    p = x.homogeneous_parity()
    if p is not None:
        return [(p, x)]
    return [(Parity.EVEN, x.even_part()), (Parity.ODD, x.odd_part())]


def supercommutator(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """``[x, y] = xy - (-1)^{|x||y|} yx``, extended bilinearly."""
    if x.dim != y.dim:
        raise DimensionError(f"gl{x.dim} vs gl{y.dim}")
    N = x.dim.size
    total = RationalMatrix.zeros(N, N)
    for px, xs in _homogeneous_parts(x):
        for py, ys in _homogeneous_parts(y):
            xy = xs.entries @ ys.entries
            yx = ys.entries @ xs.entries
            total = total + (xy + yx if px == py == Parity.ODD else xy - yx)
    px, py = x.homogeneous_parity(), y.homogeneous_parity()
    parity = px + py if px is not None and py is not None else None
    return SuperMatrix(x.dim, total, parity)


def ad_operator(x: SuperMatrix) -> RationalMatrix:
    """Matrix of ``y -> [x, y]`` on the row-major unit basis of gl(m|n)."""
    px = x.homogeneous_parity()
    if px is None:
        raise ValueError("ad_operator needs a homogeneous element; split it first")
    return _ad_cached(x.dim, x.entries, px)


@lru_cache(maxsize=4096)
def _ad_cached(dim: SuperDim, X: RationalMatrix, px: Parity) -> RationalMatrix:
    N = dim.size
    D = N * N
    out = [Fraction(0)] * (D * D)
    nz = [(divmod(k, N), v) for k, v in enumerate(X.entries) if v]
    for a in range(N):
        for b in range(N):
            col = a * N + b
            sign = -1 if (px == Parity.ODD and unit_parity(dim, a, b) == Parity.ODD) else 1
            # x E_ab: entry (i, b) gets x[i, a]; E_ab x: entry (a, j) gets x[b, j]
            for (i, j), v in nz:
                if j == a:
                    out[(i * N + b) * D + col] += v
                if i == b:
                    out[(a * N + j) * D + col] -= sign * v
    return RationalMatrix(D, D, out)


def supertrace(x: SuperMatrix) -> Fraction:
    m = x.dim.m
    return sum((x[i, i] if i < m else -x[i, i] for i in range(x.dim.size)), Fraction(0))


# -- orthosymplectic ---------------------------------------------------------

@dataclass(frozen=True)
class BilinearFormSpec:
    """Even supersymmetric form on C^{m|2n}: symmetric on V0, skew on V1."""

    dim: SuperDim
    gram: RationalMatrix

    def __post_init__(self):
        m, N = self.dim.m, self.dim.size
        G = self.gram
        if G.shape != (N, N):
            raise DimensionError(f"Gram of shape {G.shape} for superdimension {self.dim}")
        if self.dim.n % 2:
            raise ValueError("odd block of an orthosymplectic form must be even-dimensional")
        for a in range(N):
            for b in range(N):
                if (a < m) != (b < m):
                    if G[a, b]:
                        raise ValueError("Gram must vanish between V0 and V1")
                elif a < m and G[a, b] != G[b, a]:
                    raise ValueError("Gram must be symmetric on V0")
                elif a >= m and G[a, b] != -G[b, a]:
                    raise ValueError("Gram must be skew-symmetric on V1")
        if rank(G) != N:
            raise ValueError("degenerate Gram matrix")


def skew_blocks(k: int) -> RationalMatrix:
    """Block diagonal sum of ``[[0, 1], [-1, 0]]``; ``k`` must be even."""
    if k % 2:
        raise ValueError(f"no nondegenerate skew form in odd dimension {k}")
    rows = [[0] * k for _ in range(k)]
    for i in range(0, k, 2):
        rows[i][i + 1] = 1
        rows[i + 1][i] = -1
    return RationalMatrix.from_rows(rows, k)


def block_diag(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    N = sum(b.rows for b in blocks)
    rows = [[0] * N for _ in range(N)]
    off = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[off + i][off + j] = b[i, j]
        off += b.rows
    return RationalMatrix.from_rows(rows, N)


def standard_form(m: int, two_n: int) -> BilinearFormSpec:
    """Identity on V0 and standard skew 2x2 blocks on V1."""
    if two_n % 2:
        raise ValueError(f"odd block dimension {two_n} is not even")
    gram = block_diag([RationalMatrix.identity(m), skew_blocks(two_n)])
    return BilinearFormSpec(SuperDim(m, two_n), gram)


def _invariance_equations(B: BilinearFormSpec, parity: Parity):
    """Linear system on the entries of X in the blocks of the given parity.

    Row (u, v) encodes ``(X^T G)_{uv} + s_u (G X)_{uv} = 0`` where
    ``s_u = (-1)^{|X||u|}``.  Returns ``(matrix, positions)``.
    """
    dim, G = B.dim, B.gram
    N, m = dim.size, dim.m
    positions = [(a, b) for a in range(N) for b in range(N)
                 if unit_parity(dim, a, b) == parity]
    col_of = {ab: k for k, ab in enumerate(positions)}
    rows = []
    for u in range(N):
        s = -1 if (parity == Parity.ODD and u >= m) else 1
        for v in range(N):
            r = [Fraction(0)] * len(positions)
            # (X^T G)_{uv} = sum_w X[w,u] G[w,v]
            for w in range(N):
                g = G[w, v]
                if g and (w, u) in col_of:
                    r[col_of[w, u]] += g
            # (G X)_{uv} = sum_w G[u,w] X[w,v]
            for w in range(N):
                g = G[u, w]
                if g and (w, v) in col_of:
                    r[col_of[w, v]] += s * g
            rows.append(r)
    return RationalMatrix.from_rows(rows, len(positions)), positions


def osp_basis(B: BilinearFormSpec) -> list:
    """Homogeneous basis of osp(B): even elements first, then odd."""
    dim = B.dim
    N = dim.size
    basis = []
    for parity in (Parity.EVEN, Parity.ODD):
        eqs, positions = _invariance_equations(B, parity)
        for vec in kernel_basis(eqs):
            full = [Fraction(0)] * (N * N)
            for (a, b), x in zip(positions, vec):
                full[a * N + b] = x
            basis.append(SuperMatrix.from_vector(dim, full, parity))
    return basis


def is_member_osp(x: SuperMatrix, B: BilinearFormSpec) -> bool:
    if x.dim != B.dim:
        raise DimensionError(f"gl{x.dim} element against a form on {B.dim}")
    G = B.gram
    m = B.dim.m
    for parity, part in _homogeneous_parts(x):
        P = part.entries
        lhs = P.transpose() @ G
        rhs = G @ P
        for u in range(B.dim.size):
            s = -1 if (parity == Parity.ODD and u >= m) else 1
            for v in range(B.dim.size):
                if lhs[u, v] + s * rhs[u, v]:
                    return False
    return True


def osp_dims(a: int, b: int) -> tuple:
    """Superdimension of osp(a|b) with ``b`` even."""
    n = b // 2
    return a * (a - 1) // 2 + n * (2 * n + 1), 2 * a * n
