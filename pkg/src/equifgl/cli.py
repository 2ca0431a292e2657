"""Command-line entry point.

Subcommands: fgl, lattice, ring, pi, eliminate, efgl, chart, audit,
battery.  Output is deterministic for a fixed configuration; every
subcommand accepts --format json.  Exit codes: 0 success, 1 computation
or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .poly import GradedPoly, SymbolicError
from .config import load_config
from .exprs import parse_expr
from .fgl import get_service
from .lattice import build_lattice, NotInLattice
from . import rings
from . import efgl as efgl_mod
from . import charts
from .elimination import EliminationProblem, eliminate, brute_force_member
from .projective import (pi_verify, pi_lift, pi_underlying, pi_fixed,
                         convention_audit, all_variants, ConventionVariant,
                         DEFAULT_VARIANT)


def _emit(payload, fmt, text_fn=None):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text_fn(payload) if text_fn else payload)


def _variant(label):
    for v in all_variants():
        if v.label() == label:
            return v
    raise SymbolicError("unknown convention variant %r" % label)


def _cmd_fgl(args, cfg):
    srv = get_service()
    table = {}
    n = args.cutoff or cfg.cutoff
    if args.emit == "p":
        for j in range(n):
            table["p%d" % j] = srv.p(j).render()
    elif args.emit == "m":
        for k in range(n):
            table["m%d" % k] = srv.m(k).render()
    elif args.emit == "c":
        for i in range(1, n):
            for j in range(-i - 1, n - i):
                table["c_%d_%d" % (i, j)] = srv.c(i, j).render()
    elif args.emit == "d":
        for i in range(n):
            table["d%d" % i] = srv.d_small(i).render()
    elif args.emit == "a":
        for i in range(1, n):
            for j in range(0, n - i + 1):
                table["a_%d_%d" % (i, j)] = srv.a(i, j).render()
    _emit(table, cfg.format,
          lambda t: "\n".join("%s = %s" % kv for kv in sorted(t.items())))
    return 0


def _cmd_lattice(args, cfg):
    lat = build_lattice(max(args.degree, cfg.lattice_bound))
    basis = lat.degree_lattice(args.degree).basis_polys()
    payload = {"degree": args.degree, "rank": lat.rank(args.degree),
               "basis": [p.render() for p in basis]}
    _emit(payload, cfg.format,
          lambda p: "rank %d\n%s" % (p["rank"], "\n".join(p["basis"])))
    return 0


def _cmd_ring(args, cfg):
    srv = get_service()
    expr = parse_expr(args.expr)
    if args.op == "phi":
        out = rings.phi_map(expr, srv).render()
    elif args.op == "chi":
        out = rings.chi_map(expr, srv, cutoff=cfg.u_window).render()
    elif args.op == "aug":
        out = rings.augmentation(expr, srv).render()
    elif args.op == "euler-degree":
        deg = rings.euler_degree(rings.element(expr), srv)
        out = "undefined" if deg is None else str(deg)
    elif args.op == "tate-check":
        lat = build_lattice(cfg.lattice_bound)
        res = rings.tate_square_check(expr, srv, cutoff=cfg.u_window,
                                      lattice=lat)
        out = res or "mismatch"
        if res is None:
            _emit({"op": args.op, "expr": args.expr, "result": out},
                  cfg.format, lambda p: p["result"])
            return 1
    else:
        raise SymbolicError("unknown ring operation")
    _emit({"op": args.op, "expr": args.expr, "result": out}, cfg.format,
          lambda p: p["result"])
    return 0


def _cmd_pi(args, cfg):
    variant = _variant(args.variant or cfg.variant)
    if args.verify is not None:
        cand = parse_expr(args.verify)
        ok, report = pi_verify(args.m, args.n, cand, variant)
        _emit(report, cfg.format,
              lambda r: "pass" if r["pass"] else
              "fail\nunderlying: %(candidate)s vs %(expected)s" % r["underlying"]
              + "\nfixed: %(candidate)s vs %(expected)s" % r["fixed"])
        return 0 if ok else 1
    if args.lift:
        lat = build_lattice(max(cfg.lattice_bound,
                                2 * (args.m + args.n - 1) + 2))
        lifted = pi_lift(args.m, args.n, variant, lat)
        _emit({"m": args.m, "n": args.n, "lift": lifted.render()},
              cfg.format, lambda p: p["lift"])
        return 0
    payload = {"m": args.m, "n": args.n,
               "underlying": pi_underlying(args.m, args.n, variant).render(),
               "fixed": pi_fixed(args.m, args.n, variant).render()}
    _emit(payload, cfg.format,
          lambda p: "underlying: %(underlying)s\nfixed: %(fixed)s" % p)
    return 0


def _cmd_eliminate(args, cfg):
    rng = random.Random(args.seed if args.seed is not None else cfg.seed)

    def x(i):
        return GradedPoly.gen("x", i)

    results = []
    for trial in range(args.random):
        ps = []
        for i in (1, 2, 3):
            p = GradedPoly.zero()
            for _ in range(rng.randint(1, 3)):
                mono = GradedPoly.const(rng.randint(-3, 3) or 1)
                for _ in range(rng.randint(0, 2)):
                    mono = mono * x(rng.randint(1, 3))
                p = p + mono
            ps.append((i, p if not p.is_zero() else GradedPoly.const(1)))
        prob = EliminationProblem(3, ps)
        f = GradedPoly.zero()
        witness = {i: GradedPoly.zero() for i in (1, 2, 3)}
        for _ in range(rng.randint(1, 4)):
            i, j = rng.sample([1, 2, 3], 2)
            cmul = GradedPoly.const(rng.randint(-2, 2) or 1)
            for _ in range(rng.randint(0, 2)):
                cmul = cmul * x(rng.randint(1, 3))
            f = f + cmul * prob.syzygy(i, j)
            witness[j] = witness[j] + cmul * x(i)
            witness[i] = witness[i] - cmul * x(j)
        cert = eliminate(f, prob, [(q, i) for i, q in witness.items()])
        row = {"trial": trial, "target": f.render(),
               "terms": len(cert.combination),
               "reexpands": cert.expand() == f}
        if args.brute_force:
            row["membership"] = brute_force_member(f, prob, 5)
        results.append(row)
    ok = all(r["reexpands"] and r.get("membership", True) for r in results)
    _emit({"trials": results, "pass": ok}, cfg.format,
          lambda p: "\n".join("trial %(trial)d: %(terms)d terms, "
                              "reexpands=%(reexpands)s" % r
                              for r in p["trials"]))
    return 0 if ok else 1


def _cmd_efgl(args, cfg):
    flag = efgl_mod.Flag(tuple(args.flag.split(",")), args.tail)
    model = efgl_mod.DModel(flag, args.trunc + 1)
    n = args.trunc
    if args.action == "coproduct":
        payload = {"i=%d" % i: [["[%d..%d]" % l, "[%d..%d]" % r]
                                for _, (l, r) in
                                efgl_mod.beta_coproduct(model, i)]
                   for i in range(1, n + 1)}
    elif args.action == "change-basis":
        mat = efgl_mod.pi_to_beta(model, n)
        inv = efgl_mod.unitriangular_inverse(mat)
        payload = {"matrix": [[e.render() for e in row] for row in mat],
                   "inverse": [[e.render() for e in row] for row in inv]}
    elif args.action == "cartier":
        dual = efgl_mod.cartier_dual(model)
        payload = {"mult": {"[%d..%d]*[%d..%d]" % (l + r): "[%d..%d]" % t
                            for (l, r), t in sorted(dual["mult"].items())},
                   "double_dual_is_identity":
                       efgl_mod.cartier_roundtrip_ok(model)}
    elif args.action == "check-filtered":
        data = efgl_mod.rees_filtered_data(n)
        ok, bad = efgl_mod.filtered_check(data, model)
        payload = {"filtered": ok, "violations": bad,
                   "universality": efgl_mod.universality_check(data)}
    else:
        raise SymbolicError("unknown efgl action")
    _emit(payload, "json")
    return 0


def _cmd_chart(args, cfg):
    if args.which == "k":
        rows = charts.k_chart(args.t_range, args.s_range)
        if cfg.format == "json":
            payload = [{"y": r["y"], "derived": r["derived"],
                        "cells": [{"x": c["x"], "label": c["label"].glyph()}
                                  for c in r["cells"]]} for r in rows]
            _emit(payload, "json")
        else:
            print(charts.render_chart(rows))
    else:
        rows = charts.omega_chart(args.t_range, args.s_range,
                                  degree_bound=cfg.lattice_bound)
        if cfg.format == "json":
            payload = [{"y": r["y"],
                        "cells": [{"x": c["x"], "label": c["label"]}
                                  for c in r["cells"]]} for r in rows]
            _emit(payload, "json")
        else:
            print(charts.render_chart(rows, cell_width=12))
    return 0


def _cmd_audit(args, cfg):
    print(json.dumps(convention_audit(), indent=2, sort_keys=True))
    return 0


def _cmd_battery(args, cfg):
    from .acceptance import run_battery
    results = run_battery()
    if cfg.format == "json":
        print(json.dumps(results, indent=2, sort_keys=True))
    else:
        for row in results:
            print("%-22s %s  %s" % (row["criterion"],
                                    "PASS" if row["pass"] else "FAIL",
                                    row["detail"]))
    return 0 if all(r["pass"] for r in results) else 1


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps subcommand defaults from clobbering values parsed
    # before the subcommand name
    shared.add_argument("--config", default=argparse.SUPPRESS,
                        help="path to key=value config file")
    shared.add_argument("--format", choices=("text", "json"),
                        default=argparse.SUPPRESS)
    top = argparse.ArgumentParser(prog="equifgl", parents=[shared])
    sub = top.add_subparsers(dest="command", required=True,
                             parser_class=lambda **kw: argparse.ArgumentParser(
                                 parents=[shared], **kw))

    p = sub.add_parser("fgl", help="group-law coefficient tables")
    p.add_argument("--cutoff", type=int)
    p.add_argument("--emit", choices=("p", "m", "c", "d", "a"), default="p")
    p.set_defaults(run=_cmd_fgl)

    p = sub.add_parser("lattice", help="coefficient lattice by degree")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(run=_cmd_lattice)

    p = sub.add_parser("ring", help="comparison maps on ring elements")
    p.add_argument("--op", choices=("phi", "chi", "aug", "euler-degree",
                                    "tate-check"), required=True)
    p.add_argument("--expr", required=True)
    p.set_defaults(run=_cmd_ring)

    p = sub.add_parser("pi", help="projective classes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", help="candidate expression")
    p.add_argument("--lift", action="store_true")
    p.add_argument("--variant")
    p.set_defaults(run=_cmd_pi)

    p = sub.add_parser("eliminate", help="random elimination harness")
    p.add_argument("--random", type=int, default=10)
    p.add_argument("--seed", type=int, dest="seed")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(run=_cmd_eliminate)

    p = sub.add_parser("efgl", help="equivariant group-law models")
    p.add_argument("--flag", default="1,s,1,s,1,s")
    p.add_argument("--tail", default="alternating")
    p.add_argument("--trunc", type=int, default=4)
    p.add_argument("action", choices=("coproduct", "change-basis", "cartier",
                                      "check-filtered"))
    p.set_defaults(run=_cmd_efgl)

    p = sub.add_parser("chart", help="RO(C2)-graded charts")
    p.add_argument("which", choices=("k", "omega"))
    p.add_argument("--t-range", default="-8..8")
    p.add_argument("--s-range", default="-8..8")
    p.set_defaults(run=_cmd_chart)

    p = sub.add_parser("audit", help="convention audit report")
    p.set_defaults(run=_cmd_audit)

    p = sub.add_parser("battery", help="run the verification battery")
    p.set_defaults(run=_cmd_battery)
    return top


_VALUE_FLAGS = ("--verify", "--expr", "--t-range", "--s-range")


def _fixup(argv):
    """Join value flags with leading-dash arguments: --verify -q2."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and \
                argv[i + 1].startswith("-"):
            out.append("%s=%s" % (tok, argv[i + 1]))
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_fixup(sys.argv[1:] if argv is None else argv))
    try:
        cfg = load_config(getattr(args, "config", None), {
            "format": getattr(args, "format", None),
            "seed": getattr(args, "seed", None),
        })
        return args.run(args, cfg)
    except (SymbolicError, NotInLattice) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
