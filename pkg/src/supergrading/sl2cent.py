"""sl2-triples for even nilpotents and centralizers of nilpotents and triples.

gl(m|n): the triple is built on the Dynkin pyramid, one sl2-irrep per row.
osp(m|2n): V0 and V1 are assembled as sums ``V_r (x) M_r`` of an irrep and a
multiplicity space, each carrying the form type that makes the total form
symmetric on V0 and skew on V1.  Centralizer dimensions predicted by the
product formulas are compared with direct kernel computations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactmat import RationalMatrix, Span, kernel_basis, vstack
from .pyramids import SuperPartition, dynkin_pyramid, e_of, h_of, row_labels
from .superalg import (BilinearFormSpec, Parity, SuperDim, SuperMatrix, ad_operator,
                       block_diag, is_member_osp, osp_basis, osp_dims, skew_blocks,
                       supercommutator, unit_parity)


@dataclass(frozen=True)
class Sl2Triple:
    e: SuperMatrix
    h: SuperMatrix
    f: SuperMatrix


@dataclass(frozen=True)
class PartMultiplicity:
    part: int
    mult_p: int
    mult_q: int


@dataclass(frozen=True)
class Centralizer:
    basis: tuple
    even_dim: int
    odd_dim: int

    @property
    def sdim(self) -> tuple:
        return self.even_dim, self.odd_dim


def multiplicities(sp: SuperPartition) -> list:
    cp, cq = Counter(sp.p), Counter(sp.q)
    return [PartMultiplicity(r, cp[r], cq[r]) for r in sorted(set(cp) | set(cq), reverse=True)]


def lowering_coefficients(r: int) -> list:
    """``k (r - k)`` for the step from box k to box k-1 of an r-box row."""
    return [k * (r - k) for k in range(1, r)]


def complete_sl2_gl(sp: SuperPartition) -> Sl2Triple:
    P = dynkin_pyramid(sp)
    dim = sp.dim
    N = dim.size
    rows = [[0] * N for _ in range(N)]
    for labels in row_labels(P.specs):
        for k, c in enumerate(lowering_coefficients(len(labels)), start=1):
            rows[labels[k - 1]][labels[k]] = c
    return Sl2Triple(e_of(P), h_of(P), SuperMatrix.from_rows(dim, rows, Parity.EVEN))


def verify_sl2(t: Sl2Triple) -> bool:
    e, h, f = t.e, t.h, t.f
    return (supercommutator(e, f) == h
            and supercommutator(h, e) == e.scale(2)
            and supercommutator(h, f) == f.scale(-2))


def _units_of_parity(dim: SuperDim, parity: Parity) -> list:
    N = dim.size
    return [a * N + b for a in range(N) for b in range(N)
            if unit_parity(dim, a, b) == parity]


def _elements(dim: SuperDim, cols: Sequence[int], vectors, parity) -> list:
    N = dim.size
    out = []
    for v in vectors:
        full = [Fraction(0)] * (N * N)
        for k, x in zip(cols, v):
            full[k] = x
        out.append(SuperMatrix.from_vector(dim, full, parity))
    return out


def centralizer_e(e: SuperMatrix) -> Centralizer:
    """Kernel of ad e, split by parity."""
    if e.homogeneous_parity() != Parity.EVEN:
        raise ValueError("centralizer_e expects an even element")
    return _joint_kernel([e])


def _joint_kernel(elements: Sequence[SuperMatrix]) -> Centralizer:
    dim = elements[0].dim
    ads = [ad_operator(x) for x in elements]
    basis, dims = [], []
    for parity in (Parity.EVEN, Parity.ODD):
        cols = _units_of_parity(dim, parity)
        D = ads[0].rows
        stacked = vstack([A.submatrix(range(D), cols) for A in ads])
        kern = kernel_basis(stacked)
        basis += _elements(dim, cols, kern, parity)
        dims.append(len(kern))
    return Centralizer(tuple(basis), dims[0], dims[1])


def centralizer_sl2(t: Sl2Triple, ambient: Optional[Sequence[SuperMatrix]] = None) -> Centralizer:
    """Elements supercommuting with e, h and f (inside ``ambient`` if given)."""
    if ambient is None:
        return _joint_kernel([t.e, t.h, t.f])
    dim = t.e.dim
    ads = [ad_operator(x) for x in (t.e, t.h, t.f)]
    basis, dims = [], []
    for parity in (Parity.EVEN, Parity.ODD):
        amb = [b for b in ambient if b.homogeneous_parity() == parity]
        if not amb:
            dims.append(0)
            continue
        cols = [b.vector() for b in amb]
        images = [RationalMatrix.from_columns([A.apply(c) for c in cols]) for A in ads]
        kern = kernel_basis(vstack(images))
        for coeffs in kern:
            x = SuperMatrix.zero(dim)
            for c, b in zip(coeffs, amb):
                if c:
                    x = x + b.scale(c)
            basis.append(SuperMatrix(dim, x.entries, parity))
        dims.append(len(kern))
    return Centralizer(tuple(basis), dims[0], dims[1])


def is_bracket_closed(basis: Sequence[SuperMatrix]) -> bool:
    """Every supercommutator of basis elements lies in their span."""
    if not basis:
        return True
    dim = basis[0].dim
    span = Span([b.vector() for b in basis], dim.size ** 2)
    for i, x in enumerate(basis):
        for y in basis[i:]:
            if supercommutator(x, y).vector() not in span:
                return False
    return True


def gl_centralizer_dims(sp: SuperPartition) -> tuple:
    """Superdimension of gl(m_1|n_1) x ... x gl(m_N|n_N)."""
    mults = multiplicities(sp)
    return (sum(pm.mult_p ** 2 + pm.mult_q ** 2 for pm in mults),
            sum(2 * pm.mult_p * pm.mult_q for pm in mults))


def gl_centralizer_factors(sp: SuperPartition) -> list:
    return [(pm.mult_p, pm.mult_q) for pm in multiplicities(sp)]


# -- orthosymplectic ---------------------------------------------------------

def is_orthosymplectic(sp: SuperPartition) -> bool:
    """Even parts of p and odd parts of q occur with even multiplicity."""
    if sp.n % 2:
        raise ValueError(f"q sums to {sp.n}, which is odd")
    cp, cq = Counter(sp.p), Counter(sp.q)
    return (all(c % 2 == 0 for r, c in cp.items() if r % 2 == 0)
            and all(c % 2 == 0 for r, c in cq.items() if r % 2 == 1))


def _irrep_form(r: int) -> RationalMatrix:
    """Invariant form on the r-dim irrep in the basis v_0..v_{r-1} (e v_i = v_{i+1}).

    ``B(v_i, v_{r-1-i}) = (-1)^i``: symmetric for odd r, skew for even r.
    """
    rows = [[0] * r for _ in range(r)]
    for i in range(r):
        rows[i][r - 1 - i] = (-1) ** i
    return RationalMatrix.from_rows(rows, r)


def _kron(A: RationalMatrix, B: RationalMatrix) -> RationalMatrix:
    return RationalMatrix.from_rows(
        [[A[i, j] * B[k, l] for j in range(A.cols) for l in range(B.cols)]
         for i in range(A.rows) for k in range(B.rows)])


def osp_factors(sp: SuperPartition) -> list:
    """Factors ``(a, b)`` meaning osp(a|b) of the centralizer of the triple.

    A part of odd size s gives osp(mult_p(s) | mult_q(s)); a part of even size
    r gives osp(mult_q(r) | mult_p(r)).  Trivial factors osp(0|0) are dropped.
    """
    if not is_orthosymplectic(sp):
        raise ValueError(f"{sp} is not orthosymplectic")
    out = []
    for pm in multiplicities(sp):
        a, b = (pm.mult_p, pm.mult_q) if pm.part % 2 else (pm.mult_q, pm.mult_p)
        if a or b:
            out.append((a, b))
    return out


def osp_centralizer_dims(sp: SuperPartition) -> tuple:
    even = odd = 0
    for a, b in osp_factors(sp):
        de, do = osp_dims(a, b)
        even += de
        odd += do
    return even, odd


def build_osp_nilpotent(sp: SuperPartition):
    """An sl2-triple inside osp(m|n) with Jordan types p on V0 and q on V1.

    Returns ``(triple, form)``.  Basis: for each distinct part r (descending)
    and each copy of it, the r boxes of that row left to right; V0 first.
    """
    if not is_orthosymplectic(sp):
        raise ValueError(f"{sp} is not orthosymplectic")
    dim = sp.dim
    N = dim.size
    grams, blocks = [], []  # blocks: list of (start, r)
    start = 0
    for parts, symmetric_total in ((sp.p, True), (sp.q, False)):
        for r, mult in sorted(Counter(parts).items(), reverse=True):
            irrep_symmetric = r % 2 == 1
            mult_symmetric = irrep_symmetric == symmetric_total
            M = RationalMatrix.identity(mult) if mult_symmetric else skew_blocks(mult)
            grams.append(_kron(M, _irrep_form(r)))
            for _ in range(mult):
                blocks.append((start, r))
                start += r
    gram = block_diag(grams)
    E = [[0] * N for _ in range(N)]
    F = [[0] * N for _ in range(N)]
    H = [0] * N
    for s, r in blocks:
        for i in range(r):
            H[s + i] = 2 * i + 1 - r
            if i + 1 < r:
                E[s + i + 1][s + i] = 1
                F[s + i][s + i + 1] = (i + 1) * (r - i - 1)
    t = Sl2Triple(SuperMatrix.from_rows(dim, E, Parity.EVEN),
                  SuperMatrix.diagonal(dim, H),
                  SuperMatrix.from_rows(dim, F, Parity.EVEN))
    return t, BilinearFormSpec(dim, gram)


def triple_in_osp(t: Sl2Triple, B: BilinearFormSpec) -> bool:
    return all(is_member_osp(x, B) for x in (t.e, t.h, t.f))


def centralizer_report(sp: SuperPartition, algebra: str = "gl", direct: bool = True) -> dict:
    """JSON-ready summary of the triple centralizer for ``sp``."""
    if algebra == "gl":
        dims = gl_centralizer_dims(sp)
        factors = gl_centralizer_factors(sp)
        if direct:
            c = centralizer_sl2(complete_sl2_gl(sp))
    elif algebra == "osp":
        dims = osp_centralizer_dims(sp)
        factors = osp_factors(sp)
        if direct:
            t, B = build_osp_nilpotent(sp)
            c = centralizer_sl2(t, osp_basis(B))
    else:
        raise ValueError(f"unknown algebra {algebra!r}")
    out = {"p": list(sp.p), "q": list(sp.q), "algebra": algebra,
           "dimEven": dims[0], "dimOdd": dims[1],
           "factors": [{"a": a, "b": b} for a, b in factors]}
    if direct:
        out["direct"] = {"dimEven": c.even_dim, "dimOdd": c.odd_dim}
        out["agree"] = c.sdim == dims
    return out
