from __future__ import annotations

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from orbicycle.errors import NonIntegral, ZeroPolynomial
from orbicycle.poly import (
    CycleIndex,
    IntPoly,
    RatPoly,
    complex_roots,
    compose,
    falling_factorial,
    integer_roots,
    negative_root_run,
    parse_poly,
    render,
    rising_factorial,
    stirling_first_unsigned,
)

int_coeffs = st.lists(st.integers(-10**20, 10**20), max_size=8)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def test_arith_examples():
    assert IntPoly([0, 1, 1])(-1) == 0
    assert IntPoly([1, 1]) * IntPoly([2, 1]) == IntPoly([2, 3, 1])
    D4 = IntPoly([0, 1]) * IntPoly([1, 1]) * IntPoly([2, 1, 1])
    assert D4(1) == 8


def test_canonical_form():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly().coeffs == () and IntPoly([0, 0]).coeffs == ()
    assert RatPoly([Fraction(2, 4)]).coeffs == (Fraction(1, 2),)
    assert IntPoly([1, 2]) == RatPoly([1, 2])
    with pytest.raises(NonIntegral):
        IntPoly([Fraction(1, 2)])


@settings(max_examples=150)
@given(int_coeffs, int_coeffs, st.integers(-1000, 1000))
def test_ring_homomorphism(p, q, a):
    P, Q = IntPoly(p), IntPoly(q)
    assert (P * Q)(a) == P(a) * Q(a)
    assert (P + Q)(a) == P(a) + Q(a)
    assert (P - Q)(a) == P(a) - Q(a)
    assert P.scale(7)(a) == 7 * P(a)


@settings(max_examples=100)
@given(int_coeffs, int_coeffs)
def test_product_matches_sympy(p, q):
    x = oracles.X
    expected = sympy.expand(sum(c * x**k for k, c in enumerate(p)) * sum(c * x**k for k, c in enumerate(q)))
    got = IntPoly(p) * IntPoly(q)
    if expected == 0:
        assert got == IntPoly()
    else:
        assert list(got.coeffs) == oracles.sympy_coeffs(expected)


def test_compose_examples():
    y2y = RatPoly([0, 1, 1])
    inner = RatPoly([0, Fraction(1, 2), Fraction(1, 2)])
    got = compose(y2y, inner)
    assert got == RatPoly([0, Fraction(2, 4), Fraction(3, 4), Fraction(2, 4), Fraction(1, 4)])
    assert (got.scale(4)).to_int_poly() == IntPoly([0, 2, 3, 2, 1])
    F = IntPoly([0, 3, 0, 1])
    assert compose(IntPoly([0, 1]), F) == F
    assert compose(IntPoly([-5, 1]), F) == F - 5


@settings(max_examples=40)
@given(
    st.lists(rationals, min_size=1, max_size=5),
    st.lists(rationals, min_size=1, max_size=5),
    st.lists(rationals, min_size=20, max_size=20),
)
def test_compose_evaluates_pointwise(outer, inner, points):
    O, I = RatPoly(outer), RatPoly(inner)
    C = compose(O, I)
    for a in points:
        assert C(a) == O(I(a))


def test_factorials():
    assert rising_factorial(3) == IntPoly([0, 2, 3, 1])
    assert falling_factorial(3) == IntPoly([0, 2, -3, 1])
    assert rising_factorial(0) == IntPoly([1])
    for n in range(9):
        assert rising_factorial(n)(1) == math.factorial(n)
        assert list(rising_factorial(n).coeffs) == oracles.sympy_coeffs(sympy.rf(oracles.X, n))
        assert list(falling_factorial(n).coeffs) == oracles.sympy_coeffs(sympy.ff(oracles.X, n))


def test_stirling():
    assert stirling_first_unsigned(3, 2) == 3
    assert stirling_first_unsigned(5, 1) == 24
    for n in range(11):
        assert stirling_first_unsigned(n, n) == 1
        assert sum(stirling_first_unsigned(n, k) for k in range(n + 1)) == math.factorial(n)
        for k in range(n + 1):
            assert stirling_first_unsigned(n, k) == rising_factorial(n)[k]
            assert stirling_first_unsigned(n, k) == abs(sympy.functions.combinatorial.numbers.stirling(n, k, kind=1))


def test_negative_root_run_examples():
    assert negative_root_run(rising_factorial(4)) == 3
    assert negative_root_run(IntPoly([0, 0, 11, 0, 1])) == 0  # F_A4
    with pytest.raises(ZeroPolynomial):
        negative_root_run(IntPoly())


@settings(max_examples=60)
@given(st.lists(st.integers(-6, 6), max_size=6), st.integers(-3, 3).filter(bool))
def test_integer_roots_and_run(roots, lead):
    P = IntPoly([lead])
    for r in roots:
        P = P * IntPoly([-r, 1])
    found = integer_roots(P)
    assert found == {r: roots.count(r) for r in sorted(set(roots))}
    run = negative_root_run(P)
    assert all(P(-a) == 0 for a in range(1, run + 1))
    assert P(-(run + 1)) != 0


def test_complex_roots_examples():
    roots = complex_roots(IntPoly([2, 1, 1]))
    assert len(roots) == 2
    s7 = math.sqrt(7) / 2
    (z1, r1), (z2, r2) = roots
    assert abs(z1 - complex(-0.5, -s7)) < 1e-12 and abs(z2 - complex(-0.5, s7)) < 1e-12
    assert r1 < 1e-10 and r2 < 1e-10
    triple = complex_roots(IntPoly([0, 0, 0, 1]))
    assert [z for z, _ in triple] == [0, 0, 0]


def test_complex_roots_deterministic_order():
    P = rising_factorial(6) + IntPoly([0, 5, 0, 3])
    first = complex_roots(P)
    assert first == complex_roots(P)
    keys = [(z.real, z.imag) for z, _ in first]
    assert keys == sorted(keys)
    assert all(res < 1e-10 for _, res in first)


@pytest.mark.parametrize(
    "P, text",
    [
        (IntPoly([0, 2, 3, 2, 1]), "x^4 + 2x^3 + 3x^2 + 2x"),
        (IntPoly([0, -2, 3, -2, 1]), "x^4 - 2x^3 + 3x^2 - 2x"),
        (IntPoly([-1]), "-1"),
        (IntPoly(), "0"),
        (IntPoly([5, -1]), "-x + 5"),
    ],
)
def test_render(P, text):
    assert render(P) == text == str(P)
    assert parse_poly(text) == P


@settings(max_examples=100)
@given(int_coeffs)
def test_render_json_round_trip(p):
    P = IntPoly(p)
    assert parse_poly(render(P)) == P
    assert IntPoly.from_json(P.to_json()) == P
    assert all(isinstance(c, str) for c in P.to_json())


def test_cycle_index_invariants():
    Z = CycleIndex(3, {(3, 0, 0): 1, (1, 1, 0): 3, (0, 0, 1): 2})
    assert Z.total() == 6
    assert Z.all_equal() == IntPoly([0, 2, 3, 1])
    assert str(Z) == "s1^3 + 3 s1 s2 + 2 s3"
    assert Z.partial_at_ones(2) == 3
    with pytest.raises(ValueError):
        CycleIndex(3, {(1, 0, 0): 1})
