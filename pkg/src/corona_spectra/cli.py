"""Command-line front end.

Exit status: 0 success / everything verified, 1 a verification or
certification failed (reports are still written), 2 invalid input or a
violated precondition (a JSON diagnostic goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bounds as bnd
from . import closed_form as cf
from . import cospectral as cos
from . import expander as exp
from .coronal import coronal_exact
from .graphs import GraphError, analyze, matrix_of, parse_graph_spec, to_dot, to_json
from .products import edge_corona, neighbourhood_corona
from .spectral import DEFAULT_CLUSTER_TOL, cluster_spectrum, eigensolve_sym


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    tol: float = cf.DEFAULT_TOL
    cluster_tol: float = DEFAULT_CLUSTER_TOL
    seed: int = 0
    fmt: str = "csv"

    def __post_init__(self):
        if self.tol <= 0 or self.cluster_tol <= 0:
            raise UsageError("tolerances must be positive")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CORONA_SPECTRA_THREADS", "1")))
    except ValueError:
        return 1


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _int_range(text: str) -> list[int]:
    """``3..5`` or ``3,4,5`` or ``4``."""
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",")]


# -- commands -------------------------------------------------------------------

def cmd_spectra(args, cfg: RunConfig) -> int:
    g1, g2 = parse_graph_spec(args.g1), parse_graph_spec(args.g2)
    if args.product == "nc":
        result = cf.nc_spectrum(args.kind, g1, g2, cfg.cluster_tol)
        spectrum, closed = result.assembled_spectrum, result.roots
        built = neighbourhood_corona(g1, g2)
        kind = args.kind
    else:
        kind = "L"
        spectrum = cf.edge_corona_l_spectrum(g1, g2, cfg.cluster_tol)
        closed = cf.edge_corona_l_spectrum(g1, g2, 1e-14).values()
        built = edge_corona(g1, g2)
    record = None
    if args.verify:
        oracle = eigensolve_sym(matrix_of(built, kind)).values
        record = cf.compare_spectra(closed, oracle, cfg.tol, cfg.cluster_tol,
                                    kind=kind, n1=g1.n, n2=g2.n, product=args.product)
        if args.figure:
            from .plotting import plot_spectrum_comparison
            plot_spectrum_comparison(closed, oracle, args.figure, title=f"{kind}-spectrum of {built.name or 'product'}")
    if cfg.fmt == "json":
        payload = {"spectrum": [[v, m] for v, m in spectrum.entries], "tolerance": spectrum.tolerance}
        if record is not None:
            payload["verification"] = record.to_json()
        _emit(_dump(payload), args.out)
    else:
        _emit(spectrum.to_csv(), args.out)
        if record is not None:
            sys.stderr.write(json.dumps(record.to_json(), sort_keys=True) + "\n")
    return 0 if record is None or record.passed else 1


def cmd_coronal(args, cfg: RunConfig) -> int:
    g = parse_graph_spec(args.graph)
    unreduced, reduced = coronal_exact(matrix_of(g, args.kind))
    _emit(_dump({"kind": args.kind, "unreduced": unreduced.to_json(), "reduced": reduced.to_json()}), args.out)
    return 0


def cmd_cospectral(args, cfg: RunConfig) -> int:
    g, gp, h = (parse_graph_spec(a) for a in (args.g, args.gprime, args.h))
    cert = cos.generate_cospectral_pair(args.mode, g, gp, h)
    _emit(_dump(cert.to_json()), args.out)
    return 0 if cert.equal else 1


def cmd_expander(args, cfg: RunConfig) -> int:
    sub = args.expander_cmd
    if sub == "scalars":
        val = exp.scalar_eval(args.which, args.n, args.k, args.x)
        _emit(_dump({"which": args.which, "n": args.n, "k": args.k, "x": args.x, "value": val}), args.out)
        if args.figure:
            from .plotting import plot_scalars
            plot_scalars(args.n, args.k, args.figure)
        return 0
    if sub == "sl2-family":
        ms = _int_range(args.m)
        report = exp.sl2_family(ms, n=args.n, eps=args.eps)
        payload = report.to_json()
        payload["seed"] = cfg.seed
        _emit(_dump(payload), args.report)
        if args.figure:
            from .plotting import plot_family
            plot_family(report, args.figure)
        return 0 if report.passed else 1
    if sub == "construct33":
        g, h, u, w = (parse_graph_spec(a) for a in (args.g, args.h, args.u, args.w))
        out = exp.block_augmentation(g, h, u, w)
    else:
        spec, _ = exp.sl2_cayley(args.m)
        h_spec = exp.cyclic_cayley(args.n, (1, -1))
        # drop the named pair from same-coordinate edges
        s0 = spec.gens[:2] if args.drop == "b" else spec.gens[2:]
        out = exp.cayley_augmentation(spec, h_spec, s0)
    prof = analyze(out)
    _emit(to_dot(out) if cfg.fmt == "dot" else to_json(out) + "\n", args.out)
    sys.stderr.write(json.dumps({"n": out.n, "m": out.m, "regular": prof.regularity,
                                 "connected": prof.connected}) + "\n")
    return 0


def cmd_bounds(args, cfg: RunConfig) -> int:
    g, h = parse_graph_spec(args.g), parse_graph_spec(args.h)
    prof = analyze(g)
    if not prof.is_regular:
        raise cf.PreconditionError("G must be regular")
    a_g = exp.algebraic_connectivity(g).a
    product = neighbourhood_corona(g, h)
    rep = bnd.corona_bounds(g.n, h.n, prof.regularity, a_g, product if args.oracle else None)
    payload = rep.to_json()
    ok = True
    if rep.bw_exact is not None:
        ok = rep.bw_exact >= rep.bw_lower - 1e-9 and float(rep.ivx_exact) >= rep.ivx_lower - 1e-9
    payload["holds"] = ok
    _emit(_dump(payload), args.out)
    return 0 if ok else 1


def _battery_case(case):
    kind, g1, g2, tol, ctol = case
    return cf.verify_against_oracle(kind, g1, g2, tol, cluster_tol=ctol)


def cmd_oracle(args, cfg: RunConfig) -> int:
    if args.graph:
        g = parse_graph_spec(args.graph)
        _emit(eigensolve_sym(matrix_of(g, args.kind), cfg.cluster_tol).spectrum.to_csv(), args.out)
        return 0
    if args.kind != "A":
        raise UsageError("the random battery checks the adjacency factorization only (--kind A)")
    pairs = cf.random_pairs(cfg.seed, args.count, args.max_n1, args.max_n2)
    cases = [(args.kind, g1, g2, cfg.tol, cfg.cluster_tol) for g1, g2 in pairs]
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        records = list(pool.map(_battery_case, cases))
    payload = {
        "seed": cfg.seed,
        "count": len(records),
        "records": [r.to_json() for r in records],
        "pass": all(r.passed for r in records),
    }
    _emit(_dump(payload), args.out)
    return 0 if payload["pass"] else 1


def cmd_build(args, cfg: RunConfig) -> int:
    g = parse_graph_spec(args.g)
    if args.product:
        h = parse_graph_spec(args.h)
        g = neighbourhood_corona(g, h) if args.product == "nc" else edge_corona(g, h)
    _emit(to_dot(g) if cfg.fmt == "dot" else to_json(g) + "\n", args.out)
    return 0


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=cf.DEFAULT_TOL, help="oracle match tolerance")
    common.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL, help="eigenvalue merge tolerance")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "dot"), default=None)
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    p = argparse.ArgumentParser(prog="corona-spectra", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectra", help="closed-form spectra of corona products")
    sp_sub = sp.add_subparsers(dest="product", required=True)
    for name in ("nc", "ec"):
        q = sp_sub.add_parser(name, parents=[common])
        if name == "nc":
            q.add_argument("--kind", choices=("A", "L", "Q"), default="A")
        q.add_argument("--g1", required=True)
        q.add_argument("--g2", required=True)
        q.add_argument("--verify", action="store_true", help="compare with an eigensolve of the built product")
        q.add_argument("--figure", help="with --verify: write a comparison plot")
        q.set_defaults(func=cmd_spectra, kind=q.get_default("kind") or "L")

    c = sub.add_parser("coronal", parents=[common], help="exact coronal of a graph matrix")
    c.add_argument("--graph", required=True)
    c.add_argument("--kind", choices=("A", "L", "Q"), default="A")
    c.set_defaults(func=cmd_coronal)

    co = sub.add_parser("cospectral", parents=[common], help="certify a cospectral pair of coronae")
    co.add_argument("--mode", choices=cos.MODES, required=True)
    co.add_argument("--g", required=True)
    co.add_argument("--gprime", required=True)
    co.add_argument("--h", required=True)
    co.set_defaults(func=cmd_cospectral)

    ex = sub.add_parser("expander", help="expander constructions")
    ex_sub = ex.add_subparsers(dest="expander_cmd", required=True)
    fam = ex_sub.add_parser("sl2-family", parents=[common])
    fam.add_argument("--m", default="3..5", help="moduli, e.g. 3..5")
    fam.add_argument("--n", type=int, default=3, help="length of the copy cycle")
    fam.add_argument("--eps", type=float, default=None, help="default: min measured a of the base graphs")
    fam.add_argument("--report", default=None, help="FamilyReport JSON path (default stdout)")
    fam.add_argument("--figure", default=None)
    c33 = ex_sub.add_parser("construct33", parents=[common])
    for flag in ("--g", "--h", "--u", "--w"):
        c33.add_argument(flag, required=True)
    c35 = ex_sub.add_parser("construct35", parents=[common])
    c35.add_argument("--m", type=int, default=3)
    c35.add_argument("--n", type=int, default=3)
    c35.add_argument("--drop", choices=("a", "b"), default="b",
                     help="generator pair left out of same-coordinate edges")
    sc = ex_sub.add_parser("scalars", parents=[common])
    sc.add_argument("--which", choices=("f", "g", "delta"), required=True)
    sc.add_argument("--n", type=int, required=True)
    sc.add_argument("--k", type=int, required=True)
    sc.add_argument("--x", type=float, required=True)
    sc.add_argument("--figure", default=None)
    for q in (fam, c33, c35, sc):
        q.set_defaults(func=cmd_expander)

    b = sub.add_parser("bounds", parents=[common], help="bisection / vertex-expansion bounds for G * H")
    b.add_argument("--g", required=True)
    b.add_argument("--h", required=True)
    b.add_argument("--oracle", action="store_true", help="also run the exhaustive partition oracle")
    b.set_defaults(func=cmd_bounds)

    o = sub.add_parser("oracle", parents=[common], help="eigensolve a graph, or run the seeded battery")
    o.add_argument("--graph", default=None)
    o.add_argument("--kind", choices=("A", "L", "Q"), default="A")
    o.add_argument("--count", type=int, default=20)
    o.add_argument("--max-n1", type=int, default=8)
    o.add_argument("--max-n2", type=int, default=6)
    o.set_defaults(func=cmd_oracle)

    bl = sub.add_parser("build", parents=[common], help="emit a graph or a corona product")
    bl.add_argument("--g", required=True)
    bl.add_argument("--product", choices=("nc", "ec"), default=None)
    bl.add_argument("--h", default=None)
    bl.set_defaults(func=cmd_build)
    return p


_DEFAULT_FMT = {"spectra": "csv", "oracle": "csv", "build": "json", "expander": "json"}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        fmt = args.fmt or _DEFAULT_FMT.get(args.command, "json")
        cfg = RunConfig(args.command, args.tol, args.cluster_tol, args.seed, fmt)
        if args.command == "build" and args.product and not args.h:
            raise UsageError("--product needs --h")
        return args.func(args, cfg)
    except (GraphError, cf.PreconditionError, UsageError, ValueError) as exc:
        kind = type(exc).__name__
        sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
