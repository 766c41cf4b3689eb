"""Command-line interface: ``orbicycle <subcommand> ...``.

Cycle notation and edge lists on the command line are 1-indexed; JSON graph
output is 0-indexed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import NotInvariant, OrbicycleError
from .graphs import automorphism_group, build_graph, chromatic_polynomial
from .group_polys import closed_form, cycle_index, cycle_polynomial, fixed_point_polynomial, parker_vector
from .perm import named_group
from .poly import complex_roots, integer_roots, negative_root_run
from .reciprocity import check_reciprocal, orbital_chromatic_polynomial
from .search import SearchConfig, default_threads, find_reciprocal_pairs
from .specs import parse_graph, parse_group
from .suites import SUITES

EXIT_USAGE = 64
EXIT_DOMAIN = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, text: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text)


def _group_for(text: str, graph=None):
    if text.strip().lower() == "aut":
        if graph is None:
            raise OrbicycleError("'aut' needs a graph")
        return "aut", automorphism_group(graph)
    spec = parse_group(text)
    return str(spec), named_group(spec)


def cmd_cycle_poly(args) -> int:
    spec = parse_group(args.group)
    F = closed_form(spec) if args.closed_form else cycle_polynomial(named_group(spec))
    _emit(args, str(F), {"group": str(spec), "cycle_poly": F.to_json()})
    return 0


def cmd_cycle_index(args) -> int:
    Z = cycle_index(named_group(parse_group(args.group)))
    terms = [{"exponents": list(e), "coeff": str(c)} for e, c in sorted(Z.terms.items(), reverse=True)]
    _emit(args, str(Z), {"group": args.group, "degree": Z.degree, "terms": terms})
    return 0


def cmd_parker(args) -> int:
    G = named_group(parse_group(args.group))
    vec = parker_vector(cycle_index(G), G.order, conventional=args.conventional)
    _emit(args, "(" + ", ".join(str(v) for v in vec) + ")", {"parker": [str(v) for v in vec]})
    return 0


def cmd_fixed_point(args) -> int:
    P = fixed_point_polynomial(cycle_index(named_group(parse_group(args.group))))
    _emit(args, str(P), {"fixed_point_poly": P.to_json()})
    return 0


def cmd_chromatic(args) -> int:
    G = build_graph(parse_graph(args.graph))
    P = chromatic_polynomial(G)
    _emit(args, str(P), {"graph": G.to_json(), "chromatic_poly": P.to_json()})
    return 0


def cmd_orbital(args) -> int:
    G = build_graph(parse_graph(args.graph))
    label, group = _group_for(args.group, G)
    P = orbital_chromatic_polynomial(G, group)
    _emit(args, str(P), {"graph": G.to_json(), "group": label, "orbital_poly": P.to_json()})
    return 0


def cmd_check(args) -> int:
    G = build_graph(parse_graph(args.graph))
    label, group = _group_for(args.group, G)
    try:
        rep = check_reciprocal(G, group, label=label)
    except NotInvariant as exc:
        print(f"NotInvariant: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(rep.to_json()))
    else:
        print(f"orbital:   {rep.orbital}")
        print(f"reflected: {rep.reflected}")
        print(f"edges = {G.m}, t = {rep.t}, t0 = {rep.t0}, edge lemma {'holds' if rep.edge_lemma_holds else 'fails'}")
        if rep.is_reciprocal:
            print("reciprocal pair")
        else:
            print(f"not reciprocal (first mismatch at x^{rep.first_mismatch})")
    return 0 if rep.is_reciprocal else 1


def cmd_roots(args) -> int:
    F = cycle_polynomial(named_group(parse_group(args.group)))
    if args.numeric:
        print("re,im,residual")
        for z, res in complex_roots(F, tol=args.tol):
            print(f"{z.real:.17g},{z.imag:.17g},{res:.3e}")
        return 0
    roots = integer_roots(F)
    if args.json:
        print(json.dumps({"integer_roots": {str(r): m for r, m in roots.items()}, "negative_run": negative_root_run(F)}))
    else:
        print("root,multiplicity")
        for r, m in roots.items():
            print(f"{r},{m}")
    return 0


def cmd_search(args) -> int:
    filters = not args.no_filters
    cfg = SearchConfig(
        n=args.n,
        max_aut_order=args.max_aut,
        edge_bound=filters,
        edge_lemma=filters,
        threads=args.threads or default_threads(),
        out=args.out,
    )
    certs = find_reciprocal_pairs(cfg)
    if not args.out:
        print(json.dumps([c.to_json() for c in certs], indent=2))
    else:
        print(f"{len(certs)} reciprocal pairs written to {args.out}")
    return 0


def cmd_verify(args) -> int:
    checks = SUITES[args.suite]()
    failed = 0
    for c in checks:
        failed += not c.passed
        if not args.json:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
    if args.json:
        print(json.dumps([{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]))
    else:
        print(f"{len(checks) - failed}/{len(checks)} passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orbicycle", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("cycle-poly", help="cycle polynomial of a group")
    s.add_argument("group")
    s.add_argument("--closed-form", action="store_true", help="use the formula instead of enumeration")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cycle_poly)

    s = sub.add_parser("cycle-index", help="unnormalised cycle index")
    s.add_argument("group")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cycle_index)

    s = sub.add_parser("parker", help="Parker vector")
    s.add_argument("group")
    s.add_argument("--conventional", action="store_true", help="multiply entry k by k")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_parker)

    s = sub.add_parser("fixed-point", help="fixed point polynomial")
    s.add_argument("group")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_fixed_point)

    s = sub.add_parser("chromatic", help="chromatic polynomial of a graph")
    s.add_argument("graph")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_chromatic)

    for name, func, helptext in (
        ("orbital", cmd_orbital, "orbital chromatic polynomial"),
        ("check", cmd_check, "test whether (graph, group) is a reciprocal pair"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("graph")
        s.add_argument("group", help="group spec, or 'aut' for the full automorphism group")
        s.add_argument("--json", action="store_true")
        s.set_defaults(func=func)

    s = sub.add_parser("roots", help="integer roots, or numeric complex roots with --numeric")
    s.add_argument("group")
    s.add_argument("--numeric", action="store_true")
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("search", help="exhaustive search for reciprocal pairs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-aut", type=int, default=5040)
    s.add_argument("--no-filters", action="store_true")
    s.add_argument("--threads", type=int, default=0, help="worker processes (default: all cores)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", help="run a named identity suite")
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OrbicycleError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
