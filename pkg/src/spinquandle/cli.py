"""Command line: ``spinquandle verify ...`` and ``spinquandle search ...``."""
from __future__ import annotations

import argparse
import json
import sys

from . import embeddings as emb
from . import groups as grp
from . import verify as vf
from .numerics import EPS
from .quandle import core_cyclic, projective_quandle, sphere_quandle
from .report import dump_reports
from .search import search_core_vs_twisted

QUANDLES = ("sphere", "projective", "core-zk", "conj-o2", "twisted-so2")
DIAGRAMS = ("6.3", "7.2", "covering-square", "lifted-action")


def _axioms(args) -> list:
    if args.quandle == "sphere":
        q = sphere_quandle(args.n, args.exact)
    elif args.quandle == "projective":
        q = projective_quandle(args.n, args.exact)
    elif args.quandle == "core-zk":
        q = core_cyclic(args.n)
    elif args.quandle == "conj-o2":
        q = emb.group_quandle("conj", grp.O2(args.exact), exact=args.exact)
    else:
        so2 = grp.SO2(args.exact)
        q = emb.group_quandle("twisted", so2, grp.inversion(so2), exact=args.exact)
    return [vf.check_axioms(q, args.samples, args.seed, args.tolerance)]


def _embedding(args) -> list:
    f = emb.build_embedding(args.map, args.n, args.exact)
    return [vf.check_hom(f, args.samples, args.seed, args.tolerance),
            vf.check_injective(f, args.samples, args.seed, args.tolerance)]


def _diagram(args) -> list:
    common = dict(samples=args.samples, seed=args.seed, exact=args.exact, eps=args.tolerance)
    if args.which == "6.3":
        return [vf.check_diagram_63(**common), vf.check_gamma(**common)]
    if args.which == "7.2":
        return [vf.check_diagram_72(**common)]
    if args.which == "covering-square":
        return [vf.check_covering_square(args.n, **common)]
    return [vf.check_lifted_action(args.n, **common)]


def _kernel(args) -> list:
    return [vf.check_kernel_p4(args.samples, args.seed, args.tolerance),
            vf.check_p4_hom(min(args.samples, 1000), args.seed, eps=args.tolerance)]


def _add_common(p: argparse.ArgumentParser, samples: int) -> None:
    p.add_argument("--samples", type=int, default=samples)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", metavar="PATH", help="write the structured report here")
    p.add_argument("--tolerance", type=float, default=EPS, help="float tolerance (default 1e-9)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinquandle",
                                     description="Check quandle embeddings into O, Spin and Pin groups.")
    top = parser.add_subparsers(dest="command", required=True)

    verify = top.add_parser("verify", help="run property and diagram checks")
    checks = verify.add_subparsers(dest="check", required=True)

    p = checks.add_parser("axioms", help="quandle axioms Q1-Q3")
    p.add_argument("--quandle", choices=QUANDLES, required=True)
    p.add_argument("--n", type=int, default=2, help="sphere dimension, or k for core-zk")
    p.add_argument("--exact", action="store_true")
    _add_common(p, 10_000)
    p.set_defaults(run=_axioms)

    p = checks.add_parser("embedding", help="homomorphism and injectivity of a map")
    p.add_argument("--map", choices=emb.MAP_NAMES, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--exact", action="store_true")
    _add_common(p, 1000)
    p.set_defaults(run=_embedding)

    p = checks.add_parser("diagram", help="commutative diagrams")
    p.add_argument("--which", choices=DIAGRAMS, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--exact", action="store_true")
    _add_common(p, 1000)
    p.set_defaults(run=_diagram)

    p = checks.add_parser("kernel-p4", help="kernel of the SU(2) x SU(2) -> SO(4) cover")
    _add_common(p, 10_000)
    p.set_defaults(run=_kernel)

    search = top.add_parser("search", help="finite quandle isomorphism searches")
    kinds = search.add_subparsers(dest="kind", required=True)
    p = kinds.add_parser("core-vs-twisted", help="Core G against Conj(H, psi) over the catalog")
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--no-prune", action="store_true", help="disable invariant pruning")
    p.set_defaults(run=None)
    return parser


def _run_search(args) -> int:
    result = search_core_vs_twisted(args.max_order, prune=not args.no_prune)
    for s in result["summary"]:
        print(f"{s['G']:<14} order={s['order']:<3} tested={s['pairs_tested']:<5} "
              f"matches={s['matches']:<4} {s['verdict']}")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(result, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "search":
        return _run_search(args)
    try:
        reports = args.run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for r in reports:
        print(r.line())
        for w in r.witnesses:
            print("    witness:", *w)
    if args.report:
        dump_reports(reports, args.report)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
