from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from orbicycle.errors import DegreeMismatch, DegreeTooSmall, NotPrime, OrderCapExceeded, PointOutOfRange, RepeatedPoint
from orbicycle.perm import (
    PGL2,
    A,
    C,
    D,
    Gens,
    Permutation,
    PermutationGroup,
    Prod,
    S,
    T,
    Wr,
    even_subgroup,
    group_from_generators,
    named_group,
    perm_from_cycles,
)


def perms(n):
    return st.permutations(list(range(n))).map(Permutation)


@pytest.mark.parametrize(
    "n, cycles, count, sign",
    [
        (4, [[0, 1, 2, 3]], 1, -1),
        (4, [], 4, 1),
        (3, [[0, 2]], 2, -1),
    ],
)
def test_perm_from_cycles_examples(n, cycles, count, sign):
    p = perm_from_cycles(n, cycles)
    assert p.degree == n
    assert p.cycle_count() == count
    assert p.sign() == sign


def test_perm_from_cycles_errors():
    with pytest.raises(RepeatedPoint):
        perm_from_cycles(4, [[0, 1], [1, 2]])
    with pytest.raises(PointOutOfRange):
        perm_from_cycles(3, [[0, 3]])


def test_cycles_and_notation():
    p = perm_from_cycles(5, [[3, 1], [0, 4, 2]])
    assert p.cycles() == ((0, 4, 2), (1, 3))
    assert p.to_cycle_string() == "(1 5 3)(2 4)"
    assert Permutation.identity(3).to_cycle_string() == "()"
    assert p.cycle_type() == (0, 1, 1, 0, 0)  # c_k = number of k-cycles
    assert p.order() == 6


def test_composition_applies_left_first():
    p = perm_from_cycles(3, [[0, 1]])
    q = perm_from_cycles(3, [[1, 2]])
    # 0 -p-> 1 -q-> 2
    assert (p * q)(0) == 2
    with pytest.raises(DegreeMismatch):
        p * Permutation.identity(4)


@settings(max_examples=200)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_sign_is_multiplicative(pq):
    p, q = pq
    assert (p * q).sign() == p.sign() * q.sign()


@settings(max_examples=200)
@given(st.integers(1, 9).flatmap(perms))
def test_inverse_preserves_cycle_type(p):
    assert p.cycle_count() + p.inverse().cycle_count() == 2 * p.cycle_count()
    assert p.inverse().cycle_type() == p.cycle_type()
    assert (p * p.inverse()).is_identity()


def test_group_from_generators_examples():
    assert group_from_generators(3, [perm_from_cycles(3, [[0, 1]]), perm_from_cycles(3, [[0, 1, 2]])]).order == 6
    assert group_from_generators(5, []).order == 1
    klein = group_from_generators(4, [perm_from_cycles(4, [[0, 1], [2, 3]]), perm_from_cycles(4, [[0, 2], [1, 3]])])
    assert klein.order == 4


def test_group_from_generators_cap():
    gens = [perm_from_cycles(6, [[0, 1]]), perm_from_cycles(6, [[0, 1, 2, 3, 4, 5]])]
    with pytest.raises(OrderCapExceeded):
        group_from_generators(6, gens, cap=100)


def _word_lengths(G):
    dist = {G.elements[0]: 0}
    frontier = [G.elements[0]]
    while frontier:
        nxt = []
        for a in frontier:
            for g in G.generators:
                b = a * g
                if b not in dist:
                    dist[b] = dist[a] + 1
                    nxt.append(b)
        frontier = nxt
    return dist


@pytest.mark.parametrize("spec", [S(4), D(5), PGL2(5)], ids=str)
def test_closure_order_is_bfs_then_lexicographic(spec):
    G = named_group(spec)
    assert G.elements[0].is_identity()
    dist = _word_lengths(G)
    keys = [(dist[g], g.images) for g in G.elements]
    assert keys == sorted(keys)


ORDERS = [
    (S(5), 120, 5),
    (A(5), 60, 5),
    (C(7), 7, 7),
    (D(6), 12, 6),
    (T(4), 1, 4),
    (PGL2(3), 24, 4),
    (PGL2(5), 120, 6),
    (PGL2(7), 336, 8),
    (Wr(S(3), S(2)), 72, 6),
    (Prod(C(2), C(3)), 6, 5),
]


@pytest.mark.parametrize("spec, order, degree", ORDERS, ids=lambda v: str(v))
def test_named_group_orders(spec, order, degree):
    G = named_group(spec)
    assert G.order == order
    assert G.degree == degree
    assert spec.degree() == degree


@pytest.mark.parametrize("kind, n", [("S", 5), ("A", 6), ("C", 9), ("D", 7)])
def test_named_groups_match_sympy(kind, n):
    G = named_group({"S": S, "A": A, "C": C, "D": D}[kind](n))
    assert G.order == oracles.named_sympy(kind, n).order()
    assert [G.elements.count(g) for g in G.elements[:5]] == [1] * 5


@pytest.mark.parametrize("p", [3, 5, 7])
def test_pgl2_transitive_and_infinity_last(p):
    G = named_group(PGL2(p))
    orbit = {g(0) for g in G.elements}
    assert orbit == set(range(p + 1))
    # x -> x + 1 fixes infinity, which is labelled p
    assert any(g(p) == p and g(0) == 1 and g.cycle_count() == 2 for g in G.elements)


def test_named_group_errors():
    with pytest.raises(NotPrime):
        named_group(PGL2(9))
    with pytest.raises(DegreeTooSmall):
        named_group(D(2))


def test_wreath_blocks_are_contiguous():
    G = named_group(Wr(S(2), S(3)))
    blocks = [frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})]
    for g in G.generators:
        assert {frozenset(g(v) for v in b) for b in blocks} == set(blocks)


def test_even_subgroup_examples():
    assert even_subgroup(named_group(S(3))).order == 3
    A4 = named_group(A(4))
    assert even_subgroup(A4) == A4
    D4 = named_group(D(4))
    even = even_subgroup(D4)
    assert even.order == 4
    r = perm_from_cycles(4, [[0, 1, 2, 3]])
    assert r not in even and r * r in even
    assert all(g.sign() == 1 for g in even.elements)


@pytest.mark.parametrize("spec", [s for s, _, _ in ORDERS], ids=str)
def test_sign_sum(spec):
    G = named_group(spec)
    total = sum(g.sign() for g in G.elements)
    assert total == (0 if G.has_odd() else G.order)


@pytest.mark.parametrize("spec", [S(4), D(5), PGL2(5), Wr(C(2), C(3))], ids=str)
def test_regeneration_is_idempotent(spec):
    G = named_group(spec)
    again = group_from_generators(G.degree, G.elements)
    assert again.element_set() == G.element_set()
    assert PermutationGroup.from_elements(G.degree, G.elements) == G


def test_gens_spec():
    G = named_group(Gens(4, [perm_from_cycles(4, [[0, 1, 2, 3]])]))
    assert G.order == 4
