"""Named verification suites run by ``orbicycle verify``."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import automorphism_group, complete_multipartite, cycle_graph, disjoint_union, complete_graph, path_graph
from .group_polys import (
    check_negative_run,
    check_parity,
    check_set_transitive_bound,
    closed_form,
    cycle_polynomial,
)
from .perm import (
    PGL2,
    A,
    C,
    D,
    Gens,
    Prod,
    S,
    T,
    Wr,
    cyclic_group,
    dihedral_group,
    named_group,
    perm_from_cycles,
    symmetric_group,
    wreath_product,
)
from .poly import IntPoly, negative_root_run, parse_poly
from .reciprocity import check_join_family, check_reciprocal, check_star_theorem
from .subgroups import enumerate_subgroups


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def parity_suite() -> list[Check]:
    out = []
    for spec in [A(n) for n in range(1, 7)] + [C(3), C(5), C(7), D(5), PGL2(3)]:
        G = named_group(spec)
        if G.has_odd():
            rep = check_negative_run(G)
            out.append(Check(f"negative run {spec}", rep.passed, f"run = {rep.data['run']}"))
        else:
            rep = check_parity(G)
            out.append(Check(f"parity {spec}", rep.passed))
    return out


PRODUCT_SPECS = [
    Prod(C(2), C(3)),
    Prod(S(3), C(2)),
    Prod(S(3), S(3)),
    Prod(A(4), C(3)),
    Prod(D(4), S(2)),
    Prod(C(5), D(5)),
    Prod(PGL2(3), C(2)),
    Prod(S(2), S(2), S(2)),
    Prod(A(5), T(2)),
    Prod(D(6), C(4)),
]

WREATH_SPECS = [
    Wr(S(3), S(2)),
    Wr(C(2), C(2)),
    Wr(C(2), S(3)),
    Wr(S(2), S(3)),
    Wr(C(3), C(3)),
    Wr(S(3), C(3)),
    Wr(S(3), S(3)),
    Wr(C(2), D(4)),
    Wr(A(4), S(2)),
    Wr(C(4), C(2)),
]


def _closed_vs_enumerated(specs) -> list[Check]:
    out = []
    for spec in specs:
        enumerated = cycle_polynomial(named_group(spec))
        formula = closed_form(spec)
        out.append(Check(f"closed form {spec}", enumerated == formula, str(formula)))
    return out


def product_suite() -> list[Check]:
    return _closed_vs_enumerated(PRODUCT_SPECS)


def wreath_suite() -> list[Check]:
    out = _closed_vs_enumerated(WREATH_SPECS)
    F = cycle_polynomial(named_group(Wr(S(3), S(2))))
    out.append(Check("S3 wr S2 has roots -1..-3", all(F(-a) == 0 for a in (1, 2, 3)), f"run = {negative_root_run(F)}"))
    # C3 has no odd permutations, F(2)/3 = 4, so m = 5 > 4 forces a root at -2
    F = cycle_polynomial(wreath_product(cyclic_group(3), symmetric_group(5)))
    out.append(Check("C3 wr S5 has root -2", F(-2) == 0))
    return out


def pgl_suite() -> list[Check]:
    out = []
    for p in (3, 5, 7, 11):
        G = named_group(PGL2(p))
        out.append(Check(f"PGL2({p}) order", G.order == p**3 - p, str(G.order)))
        out.append(Check(f"PGL2({p}) closed form", cycle_polynomial(G) == closed_form(PGL2(p))))
    rep = check_set_transitive_bound(named_group(PGL2(5)))
    out.append(Check("PGL2(5) set-transitive", rep.data["equality"] and rep.data["value"] == 840, rep.detail))
    return out


def star_theorem_suite(max_k: int = 3) -> list[Check]:
    out = []
    for k in range(1, max_k + 1):
        for K in enumerate_subgroups(symmetric_group(k)):
            rep = check_star_theorem(k, K)
            out.append(Check(f"star k={k} |K|={K.order} gens={[g.to_cycle_string() for g in K.generators]}", rep.passed))
    for m in (1, 2, 3):
        rep = check_join_family(m)
        out.append(Check(f"join K{m} + N{m + 1}", rep.passed))
    return out


def paper_examples_suite() -> list[Check]:
    out = []
    G = cycle_graph(4)
    D4 = dihedral_group(4)
    rep = check_reciprocal(G, D4)
    out.append(Check("C4 with D4: orbital = x(x-1)(x^2-x+2)", rep.orbital == parse_poly("x^4 - 2x^3 + 3x^2 - 2x")))
    out.append(Check("C4 with D4: F = x(x+1)(x^2+x+2)", cycle_polynomial(D4) == parse_poly("x^4 + 2x^3 + 3x^2 + 2x")))
    out.append(Check("C4 with D4 reciprocal", rep.is_reciprocal))
    out.append(Check("C4 automorphism group has order 8", automorphism_group(G).order == 8))

    P3 = path_graph(3)
    swap = named_group(Gens(3, [perm_from_cycles(3, [[0, 2]])]))
    rep = check_reciprocal(P3, swap)
    out.append(Check("P3 with C2: orbital = x^2(x-1)", rep.orbital == IntPoly([0, 0, -1, 1])))
    out.append(Check("P3 with C2: F = x^2(x+1)", cycle_polynomial(swap) == IntPoly([0, 0, 1, 1])))
    out.append(Check("P3 with C2 reciprocal", rep.is_reciprocal))

    K3x3 = disjoint_union(complete_graph(3), complete_graph(3), complete_graph(3))
    rep = check_reciprocal(K3x3, named_group(Wr(S(3), C(3))))
    out.append(Check("3K3 with S3 wr C3 reciprocal", rep.is_reciprocal))
    rep = check_reciprocal(K3x3, named_group(Wr(S(3), S(3))))
    out.append(Check("3K3 with S3 wr S3: edge lemma holds", rep.edge_lemma_holds))
    out.append(Check("3K3 with S3 wr S3: not reciprocal", not rep.is_reciprocal))

    rep = check_reciprocal(complete_multipartite(3, 3), named_group(Wr(S(3), S(2))))
    out.append(Check("K33 with S3 wr S2 not reciprocal", not rep.is_reciprocal))

    for m in (1, 2, 3):
        rep = check_join_family(m)
        out.append(Check(f"K{m} joined to N{m + 1} reciprocal, factorization", rep.passed))
    for k, K in ((1, named_group(T(1))), (2, named_group(T(2))), (2, named_group(S(2)))):
        rep = check_star_theorem(k, K)
        out.append(Check(f"star with {2 * k} leaves, |G| = {rep.order}", rep.passed))

    out.append(Check("F_S4 = x^4 + 6x^3 + 11x^2 + 6x", cycle_polynomial(named_group(S(4))) == parse_poly("x^4 + 6x^3 + 11x^2 + 6x")))
    out.append(Check("F_C6 closed form", closed_form(C(6)) == parse_poly("x^6 + x^3 + 2x^2 + 2x")))
    out.append(Check("PGL2(3) = rising(4)", closed_form(PGL2(3)) == cycle_polynomial(named_group(S(4)))))
    return out


SUITES = {
    "parity": parity_suite,
    "product": product_suite,
    "wreath": wreath_suite,
    "pgl": pgl_suite,
    "star-theorem": star_theorem_suite,
    "paper-examples": paper_examples_suite,
}
