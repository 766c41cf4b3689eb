from __future__ import annotations

import pytest

import oracles
from orbicycle.errors import NotInvariant
from orbicycle.graphs import (
    automorphism_group,
    build_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    null_graph,
    path_graph,
    star_graph,
    transposition_counts,
)
from orbicycle.group_polys import cycle_polynomial
from orbicycle.perm import (
    C,
    D,
    Gens,
    S,
    Wr,
    cyclic_group,
    direct_product,
    named_group,
    perm_from_cycles,
    symmetric_group,
    trivial_group,
    wreath_product,
)
from orbicycle.poly import IntPoly, parse_poly
from orbicycle.reciprocity import (
    check_join_family,
    check_reciprocal,
    check_star_theorem,
    edge_bound_filter,
    edge_lemma_holds,
    is_reciprocal,
    orbit_count_proper_colorings,
    orbital_chromatic_polynomial,
    reflected_cycle_polynomial,
    star_pair,
)
from orbicycle.specs import parse_graph
from orbicycle.subgroups import enumerate_subgroups


def leaf_swap():
    return named_group(Gens(3, [perm_from_cycles(3, [[0, 2]])]))


def invariant_pairs():
    """Graphs from the builder set, each with every subgroup of its
    automorphism group."""
    for text in ["Cyc4", "Path3", "Path4", "Star3", "K3", "N3", "Kmulti(2,3)", "join(K1,N2)", "union(K2,K2)", "Cyc5"]:
        G = build_graph(parse_graph(text))
        for H in enumerate_subgroups(automorphism_group(G)):
            yield text, G, H


PAIRS = list(invariant_pairs())


def test_orbital_examples():
    assert orbital_chromatic_polynomial(cycle_graph(4), named_group(D(4))) == parse_poly("x^4 - 2x^3 + 3x^2 - 2x")
    assert orbital_chromatic_polynomial(path_graph(3), leaf_swap()) == IntPoly([0, 0, -1, 1])
    for n in (3, 4):
        for H in enumerate_subgroups(symmetric_group(n)):
            assert orbital_chromatic_polynomial(null_graph(n), H) == cycle_polynomial(H)
    with pytest.raises(NotInvariant):
        orbital_chromatic_polynomial(cycle_graph(4), named_group(S(4)))


def test_orbital_counts_orbits_on_proper_colourings():
    for text, G, H in PAIRS:
        P = orbital_chromatic_polynomial(G, H)
        elements = [h.images for h in H.elements]
        for q in (1, 2, 3):
            if q**G.n > 10**5:
                continue
            count, r = divmod(P(q), H.order)
            assert r == 0
            assert count == orbit_count_proper_colorings(G, H, q)
            assert count == oracles.orbits_on_proper_colourings(G.n, G.edges, elements, q)


def test_check_reciprocal_examples():
    assert check_reciprocal(cycle_graph(4), named_group(D(4))).is_reciprocal
    rep = check_reciprocal(complete_multipartite(3, 3), named_group(Wr(S(3), S(2))))
    assert not rep.is_reciprocal and rep.first_mismatch is not None
    K3x3 = disjoint_union(complete_graph(3), complete_graph(3), complete_graph(3))
    rep = check_reciprocal(K3x3, named_group(Wr(S(3), S(3))))
    assert rep.edge_lemma_holds and not rep.is_reciprocal
    assert check_reciprocal(K3x3, named_group(Wr(S(3), C(3)))).is_reciprocal
    with pytest.raises(NotInvariant):
        check_reciprocal(cycle_graph(4), named_group(S(4)))


def test_report_fields_and_json():
    rep = check_reciprocal(path_graph(3), leaf_swap())
    assert rep.is_reciprocal and rep.first_mismatch is None
    assert rep.orbital == rep.reflected == reflected_cycle_polynomial(leaf_swap())
    data = rep.to_json()
    assert list(data) == [
        "graph", "group", "orbital_poly", "reflected_cycle_poly", "is_reciprocal",
        "edge_lemma_holds", "first_mismatch", "t", "t0",
    ]
    assert data["is_reciprocal"] is True
    assert IntPoly.from_json(data["orbital_poly"]) == rep.orbital


def test_reciprocity_implies_edge_lemma_and_whitney():
    for text, G, H in PAIRS:
        rep = check_reciprocal(G, H)
        assert rep.is_reciprocal == (rep.orbital == rep.reflected)
        if rep.is_reciprocal:
            assert rep.edge_lemma_holds, text
            assert edge_bound_filter(G, H)
        t, t0 = transposition_counts(G, H)
        n = G.n
        assert rep.orbital[n - 1] == -G.m + t0
        assert rep.reflected[n - 1] == -t


@pytest.mark.parametrize("n", [3, 4])
def test_null_and_complete_corollaries(n):
    for H in enumerate_subgroups(symmetric_group(n)):
        assert is_reciprocal(null_graph(n), H) == (not H.has_odd())
        assert is_reciprocal(complete_graph(n), H) == (H.order == symmetric_group(n).order)


def test_edge_bound_examples():
    assert edge_bound_filter(complete_graph(5))
    K5_minus = build_graph(parse_graph("edges(5;1-2,1-3,1-4,1-5,2-3,2-4,2-5,3-4,3-5)"))
    assert K5_minus.m == 9 and not edge_bound_filter(K5_minus)
    assert edge_bound_filter(null_graph(5))


@pytest.mark.parametrize("n, m", [(a, b) for a in range(3, 6) for b in range(a, 6)])
def test_complete_bipartite_fails_edge_lemma(n, m):
    G = complete_multipartite(n, m)
    H = direct_product(symmetric_group(n), symmetric_group(m))
    assert not edge_lemma_holds(G, H)


def test_star_theorem_examples():
    rep = check_star_theorem(1)
    assert rep.passed and rep.order == 2
    G, H = star_pair(trivial_group(1))
    assert G.is_star() and (G.n, G.m) == (3, 2)
    rep = check_star_theorem(2, symmetric_group(2))
    assert rep.passed and rep.order == 8
    rep = check_star_theorem(2, trivial_group(2))
    assert rep.passed and rep.order == 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_star_theorem_all_top_groups(k):
    for K in enumerate_subgroups(symmetric_group(k)):
        assert check_star_theorem(k, K).passed


def test_join_family_examples():
    r1 = check_join_family(1)
    assert r1.passed and r1.order == 2
    r2 = check_join_family(2)
    assert r2.passed and r2.order == 12
    r3 = check_join_family(3)
    assert r3.passed and r3.order == 144


def test_direct_product_closure_on_star_pairs():
    G1, H1 = star_pair(trivial_group(1))
    G2, H2 = star_pair(symmetric_group(2))
    assert is_reciprocal(G1, H1) and is_reciprocal(G2, H2)
    assert is_reciprocal(disjoint_union(G1, G2), direct_product(H1, H2))


def test_wreath_closure_with_path3_and_c3():
    G = disjoint_union(path_graph(3), path_graph(3), path_graph(3))
    H = wreath_product(leaf_swap(), cyclic_group(3))
    assert is_reciprocal(G, H)
    # S3 has odd permutations, and here the closure genuinely fails
    assert not is_reciprocal(G, wreath_product(leaf_swap(), symmetric_group(3)))


def test_non_star_trees_never_reciprocal():
    for G in (path_graph(4), path_graph(5), star_graph(3)):
        for H in enumerate_subgroups(automorphism_group(G)):
            assert not is_reciprocal(G, H)
