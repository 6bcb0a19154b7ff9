"""Command line front end: ``nakphi {info,resolve,phi,verify,census}``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .algebra import (
    Algebra, NakayamaError, format_relations, from_kupisch, from_relations,
    is_self_injective, parse_kupisch, parse_relations, projective_classes, relations,
    socle_marks,
)
from .census import CensusParams, run_census
from .delta import delta_decompose, delta_name, delta_system
from .modcat import (
    INFINITE, Module, ZERO, all_indecomposables, composition_factors, findim, gldim,
    parse_module, pdim, resolve,
)
from .phi import alpha_trace, omega_periodic, phi, phi_dim, rho
from .theorems import Status, verify_all


def _fmt_dim(d: float) -> str:
    return "inf" if d == INFINITE else str(int(d))


def _json_dim(d: float):
    return "inf" if d == INFINITE else int(d)


def _column(a: Algebra, m: Module) -> str:
    return "[" + ";".join(f"S{v}" for v in composition_factors(a, m)) + "]"


def load_algebra(args: argparse.Namespace) -> Algebra:
    if args.kupisch is not None:
        series = parse_kupisch(args.kupisch)
        n = args.vertices if args.vertices is not None else len(series)
        return from_kupisch(n, series)
    if args.vertices is None:
        raise NakayamaError("--relations needs --vertices")
    return from_relations(args.vertices, parse_relations(args.relations))


def cmd_info(a: Algebra, args: argparse.Namespace) -> int:
    system = delta_system(a)
    ends, succ = socle_marks(a)
    rels = relations(a)
    if args.json:
        doc = {
            "N": a.n,
            "kupisch": list(a.kupisch),
            "relations": [[x.start, x.arrow_count] for x in rels],
            "r": len(rels),
            "projective_classes": [{"socle": cl.socle, "members": list(cl.members)}
                                   for cl in projective_classes(a)],
            "S": list(ends),
            "S_prime": list(succ),
            "deltas": [str(d) for d in system.deltas],
            "delta_kupisch": list(system.delta_kupisch),
            "self_injective": is_self_injective(a),
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"N = {a.n}")
    print(f"kupisch = {a.label}")
    print(f"relations = {format_relations(a)}")
    print(f"r = {len(rels)}")
    print("projective classes:")
    for cl in projective_classes(a):
        chain = " -> ".join(f"P{v}" for v in cl.members)
        print(f"  cl({cl.index}): {chain}  socle S{cl.socle}")
    print("S = {" + ",".join(map(str, ends)) + "}  S' = {" + ",".join(map(str, succ)) + "}")
    print("Delta system:")
    for j, d in enumerate(system.deltas, start=1):
        print(f"  Δ{j} = {_column(a, d)}  ({d})")
    print(f"delta kupisch = {','.join(map(str, system.delta_kupisch))}")
    print(f"self-injective = {'yes' if is_self_injective(a) else 'no'}")
    return 0


def cmd_resolve(a: Algebra, args: argparse.Namespace) -> int:
    m = parse_module(a, args.module)
    trail = resolve(a, m, args.steps)
    modules = trail.modules()
    rows = []
    for k, current in enumerate(modules):
        cover = trail.steps[k][0] if k < len(trail.steps) else None
        factors = delta_decompose(a, current) if current is not ZERO else None
        rows.append({
            "step": k,
            "module": str(current),
            "column": _column(a, current),
            "cover": None if cover is None else str(cover),
            "delta": None if factors is None else factors,
        })
    kind, index = trail.outcome.kind, trail.outcome.index
    if kind == "finite":
        result = {"pdim": index}
    elif kind == "periodic":
        result = {"rho": index}
    else:
        result = {"truncated_after": index, "pdim": _json_dim(pdim(a, m)), "rho": rho(a, m)}
    if args.json:
        print(json.dumps({"module": str(m), "trail": rows, **result}, indent=2))
        return 0
    for row, current in zip(rows, modules):
        line = f"Ω^{row['step']} = {row['module']} {row['column']}"
        name = delta_name(a, current)
        if name:
            line += f" = {name}"
        elif row["delta"]:
            line += " Δ(" + ",".join(map(str, row["delta"])) + ")"
        if row["cover"]:
            line += f"  cover {row['cover']}"
        print(line)
    if kind == "finite":
        print(f"pdim = {index}")
    elif kind == "periodic":
        print(f"periodic entry at step {index}, rho = {index}")
    else:
        print(f"stopped after {index} steps; pdim = {_fmt_dim(pdim(a, m))}, rho = {rho(a, m)}")
    return 0


def cmd_phi(a: Algebra, args: argparse.Namespace) -> int:
    if args.all:
        ms = all_indecomposables(a)
        value = phi_dim(a)
    else:
        ms = [parse_module(a, part) for part in args.module.split(",") if part]
        value = phi(a, ms)
    trace = alpha_trace(a, ms)
    periodic = sorted(omega_periodic(a).modules)
    rhos = {str(m): rho(a, m) for m in sorted(set(ms))}
    if args.json:
        doc = {"phi": value, "alpha_trace": trace,
               "omega_per": [str(m) for m in periodic], "rho": rhos}
        print(json.dumps(doc, indent=2))
        return 0
    print(f"{'phi_dim' if args.all else 'phi'} = {value}")
    print(f"alpha_trace = {','.join(map(str, trace))}")
    print(f"gldim = {_fmt_dim(gldim(a))}  findim = {findim(a)}")
    print("omega_per = {" + ", ".join(map(str, periodic)) + "}")
    if not args.all:
        for key, t in rhos.items():
            print(f"rho({key}) = {'undefined (finite pdim)' if t is None else t}")
    return 0


def cmd_verify(a: Algebra, args: argparse.Namespace) -> int:
    results = verify_all(a)
    failed = any(r.status is Status.FAIL for r in results)
    if args.json:
        doc = {"kupisch": a.label, "phi_dim": phi_dim(a), "gldim": _json_dim(gldim(a)),
               "checks": [{"name": r.name, "status": r.status.value, "evidence": r.evidence}
                          for r in results]}
        print(json.dumps(doc, indent=2))
    else:
        print(f"{a}  phi_dim = {phi_dim(a)}  gldim = {_fmt_dim(gldim(a))}  r = {len(relations(a))}")
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"  {r.name:<{width}}  {r.status.value.upper():<4}  {r.evidence}")
    return 1 if failed else 0


def _parse_range(text: str) -> tuple[int, int]:
    for sep in ("..", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    return int(text), int(text)


def cmd_census(args: argparse.Namespace) -> int:
    workers = int(os.environ.get("NAKPHI_WORKERS", args.workers))
    params = CensusParams(_parse_range(args.vertices), args.max_proj_len, workers, args.out)
    records, summary = run_census(params)
    doc = {
        "total": summary.total,
        "finite_gldim": summary.finite_gldim,
        "infinite_gldim": summary.infinite_gldim,
        "phi_histogram": {str(k): v for k, v in summary.phi_histogram.items()},
        "max_phi_ratio": summary.max_phi_ratio,
        "sharp_count": summary.sharp_count,
        "all_checks_passed": summary.all_checks_passed,
        "failures": summary.failures,
    }
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for key, value in doc.items():
            print(f"{key}: {value}")
        for rec in records:
            for f in rec.failures:
                print(f"FAIL {','.join(map(str, rec.kupisch))}: {f}")
    return 0 if summary.all_checks_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nakphi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_source(p: argparse.ArgumentParser) -> None:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--kupisch", help="comma-separated Kupisch series, e.g. 3,5,4,5,4")
        src.add_argument("--relations", help='relation list "start:arrows;...", e.g. "1:3;3:4"')
        p.add_argument("--vertices", type=int, help="number of vertices N")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    with_source(sub.add_parser("info", help="presentation, classes and Delta system"))

    p = sub.add_parser("resolve", help="syzygy trail of one module")
    with_source(p)
    p.add_argument("--module", required=True, help="module as top:length")
    p.add_argument("--steps", type=int, default=None, help="stop after this many syzygies")

    p = sub.add_parser("phi", help="phi of modules or the phi-dimension")
    with_source(p)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--module", help="comma-separated modules top:length,...")
    which.add_argument("--all", action="store_true", help="phi-dimension of the algebra")

    with_source(sub.add_parser("verify", help="run every check on one algebra"))

    p = sub.add_parser("census", help="exhaustive verification over all Kupisch series")
    p.add_argument("--vertices", required=True, help="N or a range lo-hi")
    p.add_argument("--max-proj-len", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "census":
            return cmd_census(args)
        a = load_algebra(args)
        handler = {"info": cmd_info, "resolve": cmd_resolve, "phi": cmd_phi,
                   "verify": cmd_verify}[args.command]
        return handler(a, args)
    except (NakayamaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
