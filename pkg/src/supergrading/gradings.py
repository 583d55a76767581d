"""Z-gradings of gl(m|n) given by diagonal grading elements, and goodness.

A grading is stored as its degree matrix ``deg[a][b] = deg(E_ab)``, which is
the same for any two grading elements differing by a scalar.  With the
nilpotent fixed in pyramid row form, the degree matrix is a faithful normal
form for comparing gradings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .exactmat import kernel_basis, rank
from .pyramids import (Pyramid, SuperPartition, e_pq, enumerate_pyramids,
                       h_of, h_values, psi_order)
from .superalg import Parity, SuperDim, SuperMatrix, ad_operator, supercommutator


class PreconditionError(ValueError):
    """Inputs violate the documented preconditions of a goodness test."""


@dataclass(frozen=True)
class Grading:
    dim: SuperDim
    degree: tuple  # tuple of row tuples of int

    def __post_init__(self):
        N = self.dim.size
        d = self.degree
        if len(d) != N or any(len(r) != N for r in d):
            raise ValueError("degree matrix has the wrong shape")
        for a in range(N):
            if d[a][a] != 0:
                raise ValueError("diagonal units must have degree 0")
            for b in range(N):
                if d[a][b] != -d[b][a]:
                    raise ValueError("degree matrix is not antisymmetric")
                # additivity through index 0 implies it for all triples
                if d[a][0] + d[0][b] != d[a][b]:
                    raise ValueError("degree matrix is not additive")

    @classmethod
    def from_values(cls, dim: SuperDim, h: Sequence[int]) -> "Grading":
        if len(h) != dim.size:
            raise ValueError("one grading value per basis vector")
        return cls(dim, tuple(tuple(int(x) - int(y) for y in h) for x in h))

    def potential(self) -> tuple:
        """Centred ``h`` with ``deg(E_ab) = h_a - h_b``: ``max(h) + min(h)`` is 0 or 1."""
        h = [row[0] for row in self.degree]
        shift = (max(h) + min(h)) // 2
        return tuple(x - shift for x in h)

    def __getitem__(self, ab):
        a, b = ab
        return self.degree[a][b]

    def degrees(self) -> set:
        return {x for row in self.degree for x in row}

    def is_even(self) -> bool:
        return all(x % 2 == 0 for row in self.degree for x in row)

    def to_dict(self) -> dict:
        return {"m": self.dim.m, "n": self.dim.n, "h": list(self.potential())}

    @classmethod
    def from_dict(cls, d: dict) -> "Grading":
        return cls.from_values(SuperDim(int(d["m"]), int(d["n"])), [int(x) for x in d["h"]])


@dataclass(frozen=True)
class EvenGradingPair:
    """Restriction of a grading to gl(m) x gl(n)."""

    even: Optional[Grading]  # on SuperDim(m, 0); None when m == 0
    odd: Optional[Grading]   # on SuperDim(0, n); None when n == 0


def grading_from_h(h: SuperMatrix) -> Grading:
    E = h.entries
    if not E.is_diagonal():
        raise ValueError("grading element must be diagonal")
    vals = [E[i, i] for i in range(E.rows)]
    if any(v.denominator != 1 for v in vals):
        raise ValueError("grading element must have integer eigenvalues")
    return Grading.from_values(h.dim, [int(v) for v in vals])


def component_basis(g: Grading, k: int) -> list:
    """Units ``(a, b)`` (0-based) spanning the degree-``k`` component."""
    N = g.dim.size
    return [(a, b) for a in range(N) for b in range(N) if g.degree[a][b] == k]


def _check_e(g: Grading, e: SuperMatrix):
    if e.dim != g.dim:
        raise PreconditionError(f"nilpotent lives in gl{e.dim}, grading on gl{g.dim}")
    if e.homogeneous_parity() != Parity.EVEN:
        raise PreconditionError("e must be an even element")
    N = g.dim.size
    for k, x in enumerate(e.vector()):
        a, b = divmod(k, N)
        if x and g.degree[a][b] != 2:
            raise PreconditionError(f"e has a nonzero entry at {(a, b)} of degree "
                                    f"{g.degree[a][b]}, not 2")


def is_good(g: Grading, e: SuperMatrix) -> bool:
    """Injective ``ad e: g(j) -> g(j+2)`` for ``j <= -1``, surjective for ``j >= -1``."""
    _check_e(g, e)
    ad = ad_operator(e)
    N = g.dim.size
    comps = {}
    for a in range(N):
        for b in range(N):
            comps.setdefault(g.degree[a][b], []).append(a * N + b)
    lo, hi = min(comps), max(comps)
    for j in range(lo - 2, hi + 1):
        src = comps.get(j, [])
        dst = comps.get(j + 2, [])
        r = rank(ad.submatrix(dst, src)) if src and dst else 0
        if j <= -1 and r != len(src):
            return False
        if j >= -1 and r != len(dst):
            return False
    return True


@lru_cache(maxsize=512)
def _centralizer_support(e: SuperMatrix) -> frozenset:
    kern = kernel_basis(ad_operator(e))
    return frozenset(k for v in kern for k, x in enumerate(v) if x)


def is_good_via_centralizer(h: SuperMatrix, e: SuperMatrix) -> bool:
    """All eigenvalues of ad h on the centralizer of e are nonnegative.

    ad h is diagonal on the unit basis and preserves ker(ad e), so its
    eigenvalues there are exactly the degrees of units in the support of a
    kernel basis.
    """
    if h.dim != e.dim:
        raise PreconditionError("h and e live in different algebras")
    if supercommutator(h, e) != e.scale(2):
        raise PreconditionError("[h, e] != 2e")
    g = grading_from_h(h)
    N = g.dim.size
    return all(g.degree[k // N][k % N] >= 0 for k in _centralizer_support(e))


def good_gradings_from_pyramids(sp: SuperPartition) -> list:
    """Gradings ``h(P)`` over Pyr(p, q), in pyramid order."""
    return [grading_from_h(h_of(P)) for P in enumerate_pyramids(sp)]


def scan_window(sp: SuperPartition, margin: int) -> Iterator[tuple]:
    """Offset tuples for the brute-force scan.

    Row 0 is pinned centred; every other row ranges over the nesting window
    ``[f_0, l_0 - 2(r_j - 1)]`` widened by ``margin`` on both sides.
    """
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    specs = psi_order(sp)
    f0 = 1 - specs[0].length
    l0 = specs[0].length - 1
    ranges = [range(f0 - margin, l0 - 2 * (s.length - 1) + margin + 1) for s in specs[1:]]
    for rest in itertools.product(*ranges):
        yield (f0,) + rest


def in_nesting_window(sp: SuperPartition, offsets: Sequence[int]) -> bool:
    try:
        Pyramid(tuple(offsets), psi_order(sp))
    except ValueError:
        return False
    return True


@dataclass(frozen=True)
class Candidate:
    offsets: tuple
    grading: Grading
    good: bool
    good_via_centralizer: bool
    in_window: bool


def scan_candidates(sp: SuperPartition, margin: int = 3) -> Iterator[Candidate]:
    """Every diagonal h with ``[h, e] = 2e`` in the widened window, judged both ways."""
    specs = psi_order(sp)
    e = e_pq(sp)
    for offs in scan_window(sp, margin):
        hv = h_values(specs, offs)
        h = SuperMatrix.diagonal(sp.dim, hv)
        g = Grading.from_values(sp.dim, hv)
        yield Candidate(offs, g, is_good(g, e), is_good_via_centralizer(h, e),
                        in_nesting_window(sp, offs))


def brute_force_good_gradings(sp: SuperPartition, margin: int = 3) -> set:
    return {c.grading for c in scan_candidates(sp, margin) if c.good}


def restrict_to_even(g: Grading) -> EvenGradingPair:
    m, n = g.dim.m, g.dim.n
    d = g.degree

    def block(idx, even):
        if not idx:
            return None
        dim = SuperDim(len(idx), 0) if even else SuperDim(0, len(idx))
        return Grading(dim, tuple(tuple(d[a][b] for b in idx) for a in idx))

    return EvenGradingPair(block(range(m), True), block(range(m, m + n), False))


def even_target(sp: SuperPartition, p_offsets: Sequence[int],
                q_offsets: Sequence[int]) -> EvenGradingPair:
    """g0 grading from leftmost coordinates of the rows of p and of q.

    Rows are taken in the order of ``sp.p`` and ``sp.q`` (weakly decreasing),
    which is also the order the canonical labeling uses within each parity.
    """
    if len(p_offsets) != len(sp.p) or len(q_offsets) != len(sp.q):
        raise ValueError("one offset per part of p and of q")
    hp = [f + 2 * k for r, f in zip(sp.p, p_offsets) for k in range(r)]
    hq = [f + 2 * k for r, f in zip(sp.q, q_offsets) for k in range(r)]
    return EvenGradingPair(Grading.from_values(SuperDim(sp.m, 0), hp) if hp else None,
                           Grading.from_values(SuperDim(0, sp.n), hq) if hq else None)


def extensions(sp: SuperPartition, target: EvenGradingPair) -> list:
    """Pyramids of Pyr(p, q) whose grading restricts to ``target`` on g0."""
    dims = (target.even.dim.size if target.even else 0,
            target.odd.dim.size if target.odd else 0)
    if dims != (sp.m, sp.n):
        raise ValueError("target does not match the super partition")
    return [P for P in enumerate_pyramids(sp)
            if restrict_to_even(grading_from_h(h_of(P))) == target]


def even_part_nilpotents(sp: SuperPartition) -> tuple:
    """``e_{p,q}`` split into its gl(m) and gl(n) blocks (``None`` if empty)."""
    E = e_pq(sp).entries
    m, n = sp.m, sp.n
    ev = od = None
    if m:
        ev = SuperMatrix(SuperDim(m, 0), E.submatrix(range(m), range(m)), Parity.EVEN)
    if n:
        od = SuperMatrix(SuperDim(0, n), E.submatrix(range(m, m + n), range(m, m + n)),
                         Parity.EVEN)
    return ev, od


def find_even_good_grading(sp: SuperPartition) -> Pyramid:
    """A pyramid in Pyr(p, q) whose grading has only even degrees."""
    e = e_pq(sp)
    for P in enumerate_pyramids(sp):
        if all((f - P.offsets[0]) % 2 == 0 for f in P.offsets):
            g = grading_from_h(h_of(P))
            if g.is_even() and is_good(g, e):
                return P
    raise RuntimeError(f"no even good grading found for {sp}; the scan is broken")
