"""Command line front end.

Exit codes: 0 success, 1 domain error (bad partition, non-orthosymplectic
input, ...), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gradings as gr
from . import sl2cent as sc
from .pyramids import SuperPartition, dynkin_pyramid, enumerate_pyramids, h_of, h_values, render
from .verify import SCOPES, verify_suite
from .weylgroupoid import LabeledDiagram, equivalence_search, same_grading

FORMATS = ("json", "art", "table")


class DomainError(Exception):
    pass


def _int_list(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _partition(values, name, err):
    if any(v < 1 for v in values):
        raise DomainError(f"--{name}: partition parts must be positive, got {values}")
    srt = sorted(values, reverse=True)
    if srt != list(values):
        print(f"warning: --{name} {','.join(map(str, values))} is not weakly decreasing; "
              f"using {','.join(map(str, srt))}", file=err)
    return tuple(srt)


def _super_partition(args, err) -> SuperPartition:
    p = _partition(args.p, "p", err)
    q = _partition(args.q, "q", err)
    if not p and not q:
        raise DomainError("empty super partition: give --p and/or --q")
    return SuperPartition(p, q)


def _emit_pyramids(pyrs, fmt, out):
    if fmt == "json":
        json.dump([P.to_dict() for P in pyrs], out, indent=2)
        out.write("\n")
    elif fmt == "art":
        for i, P in enumerate(pyrs):
            out.write(f"# {i}: f = {list(P.offsets)}\n{render(P)}\n\n")
    else:
        out.write("index\toffsets\th\n")
        for i, P in enumerate(pyrs):
            h = h_values(P.specs, P.offsets)
            out.write(f"{i}\t{','.join(map(str, P.offsets))}\t{','.join(map(str, h))}\n")


def _emit_mapping(d: dict, fmt: str, out):
    if fmt == "json":
        json.dump(d, out, indent=2)
        out.write("\n")
    else:
        for k, v in d.items():
            out.write(f"{k}\t{json.dumps(v)}\n")


def cmd_pyramids(args, out, err):
    sp = _super_partition(args, err)
    _emit_pyramids(enumerate_pyramids(sp), args.format, out)


def cmd_good_gradings(args, out, err):
    sp = _super_partition(args, err)
    pyrs = enumerate_pyramids(sp)
    e = gr.e_pq(sp)
    rows = []
    for P in pyrs:
        g = gr.grading_from_h(h_of(P))
        rows.append({"f": list(P.offsets), "h": list(h_values(P.specs, P.offsets)),
                     "good": gr.is_good(g, e)})
    report = {"p": list(sp.p), "q": list(sp.q), "m": sp.m, "n": sp.n,
              "count": len(pyrs), "gradings": rows}
    if args.oracle:
        brute = gr.brute_force_good_gradings(sp, args.margin)
        report["oracle"] = {"margin": args.margin, "count": len(brute),
                            "equal": brute == {gr.grading_from_h(h_of(P)) for P in pyrs}}
    if args.format == "art":
        for r, P in zip(rows, pyrs):
            out.write(f"# f = {r['f']}  good = {r['good']}\n{render(P)}\n\n")
        if args.oracle:
            o = report["oracle"]
            out.write(f"pyramid set {'=' if o['equal'] else '!='} brute-force set, "
                      f"size {o['count']}\n")
    else:
        _emit_mapping(report, args.format, out)


def cmd_dynkin(args, out, err):
    sp = _super_partition(args, err)
    t = sc.complete_sl2_gl(sp)
    P = dynkin_pyramid(sp)
    g = gr.grading_from_h(t.h)
    if args.format == "art":
        out.write(render(P) + "\n")
        return
    _emit_mapping({"pyramid": P.to_dict(),
                   "h": list(h_values(P.specs, P.offsets)),
                   "e": [[int(x) for x in row] for row in t.e.entries.tolist()],
                   "f": [[int(x) for x in row] for row in t.f.entries.tolist()],
                   "sl2": sc.verify_sl2(t),
                   "good": gr.is_good(g, t.e),
                   "goodViaCentralizer": gr.is_good_via_centralizer(t.h, t.e)},
                  args.format, out)


def cmd_extend(args, out, err):
    sp = _super_partition(args, err)
    if args.even_offsets is None and args.odd_offsets is None:
        target = gr.restrict_to_even(gr.grading_from_h(h_of(dynkin_pyramid(sp))))
    else:
        po = args.even_offsets if args.even_offsets is not None else [1 - r for r in sp.p]
        qo = args.odd_offsets if args.odd_offsets is not None else [1 - r for r in sp.q]
        target = gr.even_target(sp, po, qo)
    _emit_pyramids(gr.extensions(sp, target), args.format, out)


def cmd_centralizer(args, out, err):
    sp = _super_partition(args, err)
    if args.algebra == "osp":
        if sp.n % 2:
            raise DomainError(f"q sums to {sp.n}; osp needs an even-dimensional odd part")
        if not sc.is_orthosymplectic(sp):
            raise DomainError(f"{sp} is not an orthosymplectic partition")
    report = sc.centralizer_report(sp, args.algebra, direct=not args.formula_only)
    _emit_mapping(report, "table" if args.format == "table" else "json", out)


def cmd_diagram_eq(args, out, err):
    d1 = LabeledDiagram.parse(args.word1, args.degrees1)
    d2 = LabeledDiagram.parse(args.word2, args.degrees2)
    witness = equivalence_search(d1, d2, args.max_depth)
    report = {"d1": d1.to_dict(), "d2": d2.to_dict(),
              "sameGrading": same_grading(d1, d2),
              "equivalent": witness is not None,
              "witness": None if witness is None else [mv.to_dict() for mv in witness]}
    _emit_mapping(report, "table" if args.format == "table" else "json", out)


def cmd_verify(args, out, err):
    results = verify_suite(args.scope, args.bound)
    for r in results:
        out.write(r.line() + "\n")
        for c in r.counterexamples:
            out.write(f"  counterexample: {c}\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="supergrading",
                                 description="Good Z-gradings of gl(m|n) and osp(m|2n).")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_partition(p):
        p.add_argument("--p", type=_int_list, default=[], help="even Jordan type, e.g. 3,1")
        p.add_argument("--q", type=_int_list, default=[], help="odd Jordan type, e.g. 4,2")
        p.add_argument("--format", choices=FORMATS, default="json")
        return p

    p = with_partition(sub.add_parser("pyramids", help="list Pyr(p, q)"))
    p.set_defaults(func=cmd_pyramids)

    p = with_partition(sub.add_parser("good-gradings", help="pyramid gradings and goodness"))
    p.add_argument("--oracle", action="store_true", help="compare with the brute-force scan")
    p.add_argument("--margin", type=int, default=3)
    p.set_defaults(func=cmd_good_gradings)

    p = with_partition(sub.add_parser("dynkin", help="Dynkin pyramid and sl2-triple"))
    p.set_defaults(func=cmd_dynkin)

    p = with_partition(sub.add_parser("extend", help="extensions of a g0 grading"))
    p.add_argument("--even-offsets", type=_int_list, default=None,
                   help="leftmost coordinate of each row of p; write negative "
                        "lists with '=', e.g. --even-offsets=-2,-2 (default: centred)")
    p.add_argument("--odd-offsets", type=_int_list, default=None,
                   help="leftmost coordinate of each row of q (default: centred)")
    p.set_defaults(func=cmd_extend)

    p = with_partition(sub.add_parser("centralizer", help="centralizer of the sl2-triple"))
    p.add_argument("--algebra", choices=("gl", "osp"), default="gl")
    p.add_argument("--formula-only", action="store_true",
                   help="skip the direct kernel computation")
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("diagram-eq", help="same grading / reflection witness")
    p.add_argument("--word1", required=True)
    p.add_argument("--degrees1", required=True, type=_int_list)
    p.add_argument("--word2", required=True)
    p.add_argument("--degrees2", required=True, type=_int_list)
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.set_defaults(func=cmd_diagram_eq)

    p = sub.add_parser("verify", help="exhaustive small-rank checks")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args, out, err)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    return code or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
