"""Bases of the gl(m|n) root system, reflections, and degree maps.

A base is an ordering of the labels ``e1..em, d1..dn`` (standing for the
weights epsilon_i, delta_j); its simple roots are the differences of
neighbours.  A degree map assigns a nonnegative integer to each simple root.
Two labelled diagrams define the same grading when the induced potentials on
the labels agree up to a shift.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .gradings import Grading
from .superalg import SuperDim

EPS, DELTA = "e", "d"


@dataclass(frozen=True, order=True)
class Label:
    kind: str   # "e" or "d"
    index: int  # 1-based

    def __str__(self):
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class ParityWord:
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        for kind in (EPS, DELTA):
            idx = sorted(lb.index for lb in self.labels if lb.kind == kind)
            if idx != list(range(1, len(idx) + 1)):
                raise ValueError(f"labels of type {kind} must be {kind}1..{kind}{len(idx)}")
        if len(self.labels) < 1:
            raise ValueError("empty word")

    @classmethod
    def parse(cls, word: str) -> "ParityWord":
        """Canonically labelled word from a string over {e, d}, e.g. ``"ede"``."""
        word = word.strip().lower()
        if not word or set(word) - {EPS, DELTA}:
            raise ValueError(f"word must be a nonempty string over 'e' and 'd': {word!r}")
        count = {EPS: 0, DELTA: 0}
        labels = []
        for ch in word:
            count[ch] += 1
            labels.append(Label(ch, count[ch]))
        return cls(tuple(labels))

    @property
    def symbols(self) -> str:
        return "".join(lb.kind for lb in self.labels)

    @property
    def m(self) -> int:
        return sum(lb.kind == EPS for lb in self.labels)

    @property
    def n(self) -> int:
        return sum(lb.kind == DELTA for lb in self.labels)

    def canonical(self) -> "ParityWord":
        return ParityWord.parse(self.symbols)

    def __len__(self):
        return len(self.labels)

    def __str__(self):
        return " ".join(map(str, self.labels))


@dataclass(frozen=True)
class SimpleRootInfo:
    k: int  # 0-based: the root label[k] - label[k+1]
    isotropic: bool


@dataclass(frozen=True)
class LabeledDiagram:
    base: ParityWord
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if len(self.degrees) != len(self.base) - 1:
            raise ValueError(f"{len(self.base) - 1} simple roots need as many degrees, "
                             f"got {len(self.degrees)}")
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be nonnegative")

    @classmethod
    def parse(cls, word: str, degrees: str | Sequence[int]) -> "LabeledDiagram":
        if isinstance(degrees, str):
            degrees = [int(x) for x in degrees.split(",") if x.strip()]
        return cls(ParityWord.parse(word), tuple(degrees))

    def to_dict(self) -> dict:
        return {"word": self.base.symbols, "degrees": list(self.degrees)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "LabeledDiagram":
        return cls.parse(d["word"], [int(x) for x in d["degrees"]])


def simple_roots(base: ParityWord) -> list:
    L = base.labels
    return [SimpleRootInfo(k, L[k].kind != L[k + 1].kind) for k in range(len(L) - 1)]


def simple_root_vectors(base: ParityWord) -> list:
    """Simple roots as coefficient dicts over the labels."""
    L = base.labels
    return [{L[k]: 1, L[k + 1]: -1} for k in range(len(L) - 1)]


def _swap(base: ParityWord, k: int) -> ParityWord:
    L = list(base.labels)
    L[k], L[k + 1] = L[k + 1], L[k]
    return ParityWord(tuple(L))


def _root(base: ParityWord, k: int) -> SimpleRootInfo:
    if not 0 <= k < len(base) - 1:
        raise IndexError(f"no simple root {k} in a base of rank {len(base) - 1}")
    return simple_roots(base)[k]


def odd_reflection(base: ParityWord, k: int) -> ParityWord:
    """Reflect at the isotropic simple root ``k`` (swap the neighbours)."""
    if not _root(base, k).isotropic:
        raise ValueError(f"simple root {k} is not isotropic")
    return _swap(base, k)


def even_reflection(base: ParityWord, k: int) -> ParityWord:
    """Reflect at the even simple root ``k`` (transpose two same-type labels)."""
    if _root(base, k).isotropic:
        raise ValueError(f"simple root {k} is isotropic")
    return _swap(base, k)


def reflect_degree_map(diag: LabeledDiagram, k: int) -> LabeledDiagram:
    """Reflect at a degree-zero simple root, carrying degrees along by linearity."""
    D = diag.degrees
    if not 0 <= k < len(D):
        raise IndexError(f"no simple root {k}")
    if D[k] != 0:
        raise ValueError(f"simple root {k} has degree {D[k]}, reflections need degree 0")
    new = _swap(diag.base, k)
    # alpha_k -> -alpha_k, neighbours absorb alpha_k; with D(alpha_k)=0 the
    # degree sequence is unchanged
    D2 = list(D)
    D2[k] = -D[k]
    if k > 0:
        D2[k - 1] = D[k - 1] + D[k]
    if k + 1 < len(D):
        D2[k + 1] = D[k + 1] + D[k]
    return LabeledDiagram(new, tuple(D2))


def potential(diag: LabeledDiagram) -> dict:
    """Value at each label: first position 0, each step down by the degree."""
    val = {}
    cur = 0
    for k, lb in enumerate(diag.base.labels):
        if k:
            cur -= diag.degrees[k - 1]
        val[lb] = cur
    return val


def degree_function(diag: LabeledDiagram) -> Grading:
    """Degree matrix in the order e1..em, d1..dn."""
    base = diag.base
    val = potential(diag)
    order = sorted(base.labels, key=lambda lb: (lb.kind != EPS, lb.index))
    return Grading.from_values(SuperDim(base.m, base.n), [val[lb] for lb in order])


def same_grading(d1: LabeledDiagram, d2: LabeledDiagram) -> bool:
    if (d1.base.m, d1.base.n) != (d2.base.m, d2.base.n):
        raise ValueError("diagrams belong to different algebras")
    return degree_function(d1) == degree_function(d2)


@dataclass(frozen=True)
class Move:
    kind: str  # "odd" or "even"
    k: int

    def to_dict(self) -> dict:
        return {"kind": self.kind, "k": self.k}


def legal_moves(diag: LabeledDiagram) -> list:
    return [Move("odd" if r.isotropic else "even", r.k)
            for r in simple_roots(diag.base) if diag.degrees[r.k] == 0]


def apply_move(diag: LabeledDiagram, move: Move) -> LabeledDiagram:
    isotropic = _root(diag.base, move.k).isotropic
    if isotropic != (move.kind == "odd"):
        raise ValueError(f"{move.kind} reflection at a root that is "
                         f"{'isotropic' if isotropic else 'even'}")
    return reflect_degree_map(diag, move.k)


def replay(diag: LabeledDiagram, moves: Sequence[Move]) -> LabeledDiagram:
    for mv in moves:
        diag = apply_move(diag, mv)
    return diag


def equivalence_search(d1: LabeledDiagram, d2: LabeledDiagram,
                       max_depth: Optional[int] = None) -> Optional[list]:
    """Shortest sequence of degree-zero reflections taking ``d1`` to ``d2``.

    ``d2`` is read with its canonical labels.  Returns ``None`` if no
    sequence exists (within ``max_depth`` moves, when given).
    """
    if (d1.base.m, d1.base.n) != (d2.base.m, d2.base.n):
        raise ValueError("diagrams belong to different algebras")
    target = LabeledDiagram(d2.base.canonical(), d2.degrees)
    start = d1
    if start == target:
        return []
    parent = {start: None}
    frontier = deque([(start, 0)])
    while frontier:
        cur, depth = frontier.popleft()
        if max_depth is not None and depth >= max_depth:
            continue
        for mv in legal_moves(cur):
            nxt = reflect_degree_map(cur, mv.k)
            if nxt in parent:
                continue
            parent[nxt] = (cur, mv)
            if nxt == target:
                path = []
                node = nxt
                while parent[node] is not None:
                    node, step = parent[node]
                    path.append(step)
                return path[::-1]
            frontier.append((nxt, depth + 1))
    return None


def all_words(m: int, n: int) -> list:
    """Every arrangement of m e's and n d's, as canonically labelled words."""
    out = []

    def rec(prefix, a, b):
        if a == 0 and b == 0:
            out.append(ParityWord.parse(prefix))
            return
        if a:
            rec(prefix + EPS, a - 1, b)
        if b:
            rec(prefix + DELTA, a, b - 1)

    rec("", m, n)
    return out
