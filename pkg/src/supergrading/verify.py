"""Exhaustive small-rank verification of the classification statements.

Each check returns a :class:`CheckResult`; counterexamples are kept so a
failing run can be dumped.  Families of super partitions are independent and
are mapped over a process pool capped by ``SUPERGRADING_THREADS`` (0 = auto,
1 = serial).  Results are collected in input order, so output is
deterministic.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import gradings as gr
from . import sl2cent as sc
from .pyramids import (SuperPartition, dynkin_pyramid, h_of, super_partitions,
                       super_partitions_up_to)
from .superalg import osp_basis
from .weylgroupoid import (LabeledDiagram, all_words, equivalence_search, replay,
                           same_grading)

SCOPES = ("gl-good", "gl-cent", "osp-cent", "groupoid", "all")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexamples: list = field(default_factory=list)

    def line(self) -> str:
        return f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.detail})"


def thread_count() -> int:
    raw = os.environ.get("SUPERGRADING_THREADS", "0").strip() or "0"
    n = int(raw)
    if n <= 0:
        return os.cpu_count() or 1
    return n


def pmap(fn, items):
    items = list(items)
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# -- per-partition workers (top level so they pickle) -------------------------

def _classification(args):
    sp, margin = args
    cands = list(gr.scan_candidates(sp, margin))
    brute = {c.grading for c in cands if c.good}
    pyr = set(gr.good_gradings_from_pyramids(sp))
    problems = []
    if brute != pyr:
        problems.append(f"brute force {len(brute)} vs pyramids {len(pyr)}")
    outside = [c.offsets for c in cands if c.good and not c.in_window]
    if outside:
        problems.append(f"good outside window: {outside[:3]}")
    disagree = [c.offsets for c in cands if c.good != c.good_via_centralizer]
    return str(sp), len(cands), problems, disagree


def _dynkin_and_even(sp):
    e = gr.e_pq(sp)
    P = dynkin_pyramid(sp)
    h = h_of(P)
    problems = []
    if not (gr.is_good(gr.grading_from_h(h), e) and gr.is_good_via_centralizer(h, e)):
        problems.append("Dynkin grading rejected")
    try:
        Q = gr.find_even_good_grading(sp)
        g = gr.grading_from_h(h_of(Q))
        if not (g.is_even() and gr.is_good(g, e)):
            problems.append(f"even grading {Q.offsets} invalid")
    except RuntimeError as exc:
        problems.append(str(exc))
    return str(sp), problems


def _gl_centralizer(sp):
    t = sc.complete_sl2_gl(sp)
    c = sc.centralizer_sl2(t)
    expected = sc.gl_centralizer_dims(sp)
    problems = []
    if not sc.verify_sl2(t):
        problems.append("sl2 relations fail")
    if c.sdim != expected:
        problems.append(f"direct {c.sdim} vs formula {expected}")
    if not sc.is_bracket_closed(c.basis):
        problems.append("centralizer not bracket-closed")
    return str(sp), problems


def _osp_centralizer(sp):
    t, B = sc.build_osp_nilpotent(sp)
    c = sc.centralizer_sl2(t, osp_basis(B))
    expected = sc.osp_centralizer_dims(sp)
    problems = []
    if not sc.verify_sl2(t):
        problems.append("sl2 relations fail")
    if not sc.triple_in_osp(t, B):
        problems.append("triple not in osp")
    if c.sdim != expected:
        problems.append(f"direct {c.sdim} vs formula {expected} "
                        f"(factors {sc.osp_factors(sp)})")
    if not sc.is_bracket_closed(c.basis):
        problems.append("centralizer not bracket-closed")
    return str(sp), problems


def orthosymplectic_up_to(bound: int):
    """Orthosymplectic (p, q) with ``1 <= m + sum(q) <= bound``."""
    for total in range(1, bound + 1):
        for m in range(total, -1, -1):
            if (total - m) % 2:
                continue
            for sp in super_partitions(m, total - m):
                if sc.is_orthosymplectic(sp):
                    yield sp


def _groupoid_pair(args):
    m, n, max_degree = args
    diags = [LabeledDiagram(w, D) for w in all_words(m, n)
             for D in itertools.product(range(max_degree + 1), repeat=m + n - 1)]
    bad = []
    for d1 in diags:
        for d2 in diags:
            w = equivalence_search(d1, d2)
            if (w is not None) != same_grading(d1, d2):
                bad.append((d1.to_dict(), d2.to_dict()))
            elif w is not None:
                r = replay(d1, w)
                if r.base != d2.base.canonical() or r.degrees != d2.degrees:
                    bad.append((d1.to_dict(), d2.to_dict(), "replay"))
    return f"gl({m}|{n})", len(diags) ** 2, bad


# -- checks -------------------------------------------------------------------

def check_classification(bound: int = 5, margin: int = 3):
    sps = list(super_partitions_up_to(bound))
    rows = pmap(_classification, [(sp, margin) for sp in sps])
    cex = [(name, probs) for name, _, probs, _ in rows if probs]
    disagree = [(name, offs) for name, _, _, offs in rows if offs]
    scanned = sum(n for _, n, _, _ in rows)
    return [
        CheckResult("pyramid classification", not cex,
                    f"all super partitions m+n ≤ {bound}, margin {margin}, "
                    f"{scanned} candidates", cex),
        CheckResult("goodness criteria agree", not disagree,
                    f"ad e ranks vs centralizer eigenvalues on {scanned} candidates",
                    disagree),
    ]


def check_dynkin_and_even(bound: int = 6):
    rows = pmap(_dynkin_and_even, list(super_partitions_up_to(bound)))
    dyn = [(n, p) for n, p in rows if any("Dynkin" in x for x in p)]
    even = [(n, p) for n, p in rows if any("Dynkin" not in x for x in p)]
    return [
        CheckResult("Dynkin gradings good", not dyn,
                    f"{len(rows)} super partitions m+n ≤ {bound}", dyn),
        CheckResult("even good grading exists", not even,
                    f"{len(rows)} super partitions m+n ≤ {bound}", even),
    ]


def check_gl_centralizer(bound: int = 6):
    rows = pmap(_gl_centralizer, list(super_partitions_up_to(bound)))
    cex = [(n, p) for n, p in rows if p]
    return [CheckResult("gl centralizer", not cex,
                        f"{len(rows)} super partitions m+n ≤ {bound}", cex)]


def check_osp_centralizer(bound: int = 8):
    sps = list(orthosymplectic_up_to(bound))
    rows = pmap(_osp_centralizer, sps)
    cex = [(n, p) for n, p in rows if p]
    return [CheckResult("osp centralizer", not cex,
                        f"{len(rows)} orthosymplectic partitions m+2n ≤ {bound}", cex)]


def groupoid_algebras(bound: int):
    return [(m, total - m) for total in range(2, bound + 1) for m in range(total - 1, 0, -1)]


def check_groupoid(bound: int = 4, max_degree: int = 2):
    algs = groupoid_algebras(bound)
    rows = pmap(_groupoid_pair, [(m, n, max_degree) for m, n in algs])
    cex = [(name, bad[:5]) for name, _, bad in rows if bad]
    pairs = sum(k for _, k, _ in rows)
    names = ", ".join(name for name, _, _ in rows)
    return [CheckResult("groupoid equivalence", not cex,
                        f"{pairs} diagram pairs over {names}, degrees ≤ {max_degree}", cex)]


def verify_suite(scope: str = "all", bound: int | None = None) -> list:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    results = []
    if scope in ("gl-good", "all"):
        results += check_classification(bound or 5)
        results += check_dynkin_and_even(bound or 6)
    if scope in ("gl-cent", "all"):
        results += check_gl_centralizer(bound or 6)
    if scope in ("osp-cent", "all"):
        results += check_osp_centralizer(bound or 8)
    if scope in ("groupoid", "all"):
        results += check_groupoid(bound or 4)
    return results
