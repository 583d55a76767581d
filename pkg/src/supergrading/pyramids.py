"""Super partitions, pyramids, and the pair (h(P), e(P)) attached to a pyramid.

A pyramid is stored as its rows bottom to top.  Row ``j`` has a length, a
parity and the first coordinate ``f_j`` of its leftmost box; boxes sit at
``f_j, f_j + 2, ..., l_j``.  Only these integer coordinates matter, the
geometric 2x2 boxes are never materialized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .superalg import Parity, SuperDim, SuperMatrix


def as_partition(parts: Iterable[int]) -> tuple:
    """Validate and sort parts into a weakly decreasing tuple."""
    parts = tuple(int(x) for x in parts)
    if any(x < 1 for x in parts):
        raise ValueError(f"partition parts must be positive, got {parts}")
    return tuple(sorted(parts, reverse=True))


def partitions(n: int, largest: int | None = None) -> Iterator[tuple]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


@dataclass(frozen=True)
class SuperPartition:
    """Jordan types ``p`` on V0 and ``q`` on V1."""

    p: tuple = ()
    q: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "p", as_partition(self.p))
        object.__setattr__(self, "q", as_partition(self.q))
        if not self.p and not self.q:
            raise ValueError("empty super partition")

    @property
    def m(self) -> int:
        return sum(self.p)

    @property
    def n(self) -> int:
        return sum(self.q)

    @property
    def dim(self) -> SuperDim:
        return SuperDim(self.m, self.n)

    def __str__(self):
        return f"({','.join(map(str, self.p))}|{','.join(map(str, self.q))})"


def super_partitions(m: int, n: int) -> Iterator[SuperPartition]:
    for p in partitions(m):
        for q in partitions(n):
            yield SuperPartition(p, q)


def super_partitions_up_to(bound: int) -> Iterator[SuperPartition]:
    """Every super partition with ``1 <= m + n <= bound``."""
    for total in range(1, bound + 1):
        for m in range(total, -1, -1):
            yield from super_partitions(m, total - m)


@dataclass(frozen=True, order=True)
class RowSpec:
    length: int
    parity: Parity

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("row length must be positive")


def psi_order(sp: SuperPartition) -> tuple:
    """Merge the parts of p and q into one weakly decreasing sequence of rows.

    On equal lengths an even row precedes an odd one; the merge is stable
    otherwise.  Index 0 is the bottom row.
    """
    tagged = [(r, Parity.EVEN) for r in sp.p] + [(r, Parity.ODD) for r in sp.q]
    tagged.sort(key=lambda t: (-t[0], t[1]))
    return tuple(RowSpec(r, par) for r, par in tagged)


def _last(spec: RowSpec, f: int) -> int:
    return f + 2 * (spec.length - 1)


def h_values(specs: Sequence[RowSpec], offsets: Sequence[int]) -> tuple:
    """Diagonal of h under the canonical labeling, for arbitrary row offsets.

    Unlike :func:`h_of` this does not require the offsets to form a pyramid;
    the brute-force scan uses it for candidates outside the nesting window.
    """
    m = sum(s.length for s in specs if s.parity == Parity.EVEN)
    n = sum(s.length for s in specs if s.parity == Parity.ODD)
    out = [0] * (m + n)
    nxt = {Parity.EVEN: 0, Parity.ODD: m}
    for spec, f in zip(specs, offsets):
        for k in range(spec.length):
            out[nxt[spec.parity]] = f + 2 * k
            nxt[spec.parity] += 1
    return tuple(out)


def row_labels(specs: Sequence[RowSpec]) -> list:
    """Basis indices of the boxes of each row, left to right."""
    m = sum(s.length for s in specs if s.parity == Parity.EVEN)
    nxt = {Parity.EVEN: 0, Parity.ODD: m}
    out = []
    for spec in specs:
        start = nxt[spec.parity]
        out.append(list(range(start, start + spec.length)))
        nxt[spec.parity] += spec.length
    return out


@dataclass(frozen=True, order=True)
class Pyramid:
    """Rows bottom to top; ``offsets[j]`` is the leftmost box coordinate of row j."""

    offsets: tuple
    specs: tuple

    def __post_init__(self):
        object.__setattr__(self, "offsets", tuple(int(f) for f in self.offsets))
        object.__setattr__(self, "specs", tuple(self.specs))
        if not self.specs or len(self.specs) != len(self.offsets):
            raise ValueError("need one offset per row")
        first = self.specs[0]
        if self.offsets[0] != 1 - first.length:
            raise ValueError("bottom row must be centered at 0")
        for j in range(len(self.specs) - 1):
            a, b = self.specs[j], self.specs[j + 1]
            fa, fb = self.offsets[j], self.offsets[j + 1]
            if b.length > a.length:
                raise ValueError("row lengths must weakly decrease upwards")
            if not (fa <= fb and _last(b, fb) <= _last(a, fa)):
                raise ValueError(f"row {j + 1} is not nested in row {j}")

    @property
    def m(self) -> int:
        return sum(s.length for s in self.specs if s.parity == Parity.EVEN)

    @property
    def n(self) -> int:
        return sum(s.length for s in self.specs if s.parity == Parity.ODD)

    @property
    def dim(self) -> SuperDim:
        return SuperDim(self.m, self.n)

    @property
    def super_partition(self) -> SuperPartition:
        return SuperPartition([s.length for s in self.specs if s.parity == Parity.EVEN],
                              [s.length for s in self.specs if s.parity == Parity.ODD])

    def last(self, j: int) -> int:
        return _last(self.specs[j], self.offsets[j])

    def boxes(self) -> Iterator[tuple]:
        """``(row, x, parity)`` bottom to top, left to right."""
        for j, (spec, f) in enumerate(zip(self.specs, self.offsets)):
            for k in range(spec.length):
                yield j, f + 2 * k, spec.parity

    def to_dict(self) -> dict:
        sp = self.super_partition
        return {"p": list(sp.p), "q": list(sp.q),
                "rows": [{"len": s.length, "parity": str(s.parity), "f": f}
                         for s, f in zip(self.specs, self.offsets)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Pyramid":
        specs = [RowSpec(int(r["len"]), Parity[r["parity"].upper()]) for r in d["rows"]]
        P = cls(tuple(r["f"] for r in d["rows"]), tuple(specs))
        if "p" in d and "q" in d:
            if P.super_partition != SuperPartition(d["p"], d["q"]):
                raise ValueError("rows do not match the declared partitions")
        return P

    @classmethod
    def from_json(cls, text: str) -> "Pyramid":
        return cls.from_dict(json.loads(text))


def _extend(specs, offsets) -> Iterator[tuple]:
    j = len(offsets)
    if j == len(specs):
        yield tuple(offsets)
        return
    prev, fprev = specs[j - 1], offsets[-1]
    lo, hi = fprev, _last(prev, fprev) - 2 * (specs[j].length - 1)
    for f in range(lo, hi + 1):
        yield from _extend(specs, offsets + [f])


def enumerate_pyramids(sp: SuperPartition) -> list:
    """All pyramids in Pyr(p, q), sorted by offset tuple."""
    specs = psi_order(sp)
    return [Pyramid(offs, specs) for offs in _extend(specs, [1 - specs[0].length])]


def dynkin_pyramid(sp: SuperPartition) -> Pyramid:
    specs = psi_order(sp)
    return Pyramid(tuple(1 - s.length for s in specs), specs)


def canonical_labeling(P: Pyramid) -> dict:
    """Map ``(row, x)`` to a 0-based basis index.

    Boxes are visited bottom to top, left to right; even boxes get
    ``0..m-1`` and odd boxes ``m..m+n-1`` in visit order.
    """
    labels = row_labels(P.specs)
    return {(j, P.offsets[j] + 2 * k): idx
            for j, row in enumerate(labels) for k, idx in enumerate(row)}


def nilpotent_from_specs(specs: Sequence[RowSpec]) -> SuperMatrix:
    m = sum(s.length for s in specs if s.parity == Parity.EVEN)
    n = sum(s.length for s in specs if s.parity == Parity.ODD)
    dim = SuperDim(m, n)
    N = dim.size
    rows = [[0] * N for _ in range(N)]
    for row in row_labels(specs):
        for src, dst in zip(row, row[1:]):
            rows[dst][src] = 1
    return SuperMatrix.from_rows(dim, rows, Parity.EVEN)


def e_of(P: Pyramid) -> SuperMatrix:
    """Send each box's basis vector to its right neighbour (or to 0)."""
    return nilpotent_from_specs(P.specs)


def h_of(P: Pyramid) -> SuperMatrix:
    return SuperMatrix.diagonal(P.dim, h_values(P.specs, P.offsets))


def e_pq(sp: SuperPartition) -> SuperMatrix:
    return nilpotent_from_specs(psi_order(sp))


# -- text art ----------------------------------------------------------------

_MARK = {Parity.EVEN: "[+]", Parity.ODD: "[-]"}
_BOX_WIDTH = 4  # one coordinate unit is two characters; a box spans two units


def render(P: Pyramid) -> str:
    """Monospace drawing, top row first; ``+`` marks even boxes, ``-`` odd."""
    x0 = P.offsets[0]
    lines = []
    for j in range(len(P.specs) - 1, -1, -1):
        spec, f = P.specs[j], P.offsets[j]
        pad = " " * (2 * (f - x0))
        cell = _MARK[spec.parity].ljust(_BOX_WIDTH)
        lines.append((pad + cell * spec.length).rstrip())
    return "\n".join(lines)


def parse_art(text: str) -> Pyramid:
    """Inverse of :func:`render`."""
    lines = [ln.rstrip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty drawing")
    rows = []
    for ln in reversed(lines):
        body = ln.lstrip(" ")
        indent = len(ln) - len(body)
        if indent % 2:
            raise ValueError(f"misaligned row: {ln!r}")
        cells = [body[k:k + _BOX_WIDTH].rstrip() for k in range(0, len(body), _BOX_WIDTH)]
        marks = {c for c in cells}
        if len(marks) != 1 or cells[0] not in _MARK.values():
            raise ValueError(f"row must be a run of identical boxes: {ln!r}")
        parity = Parity.EVEN if cells[0] == _MARK[Parity.EVEN] else Parity.ODD
        rows.append((len(cells), parity, indent // 2))
    f0 = 1 - rows[0][0]
    return Pyramid(tuple(f0 + shift for _, _, shift in rows),
                   tuple(RowSpec(length, par) for length, par, _ in rows))
