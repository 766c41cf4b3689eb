"""Cycle polynomials, cycle indices and the identities they satisfy."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import (
    ArgMismatch,
    BruteforceTooLarge,
    NonDivisible,
    NonIntegralWreathComposition,
    NotPrime,
    OrderMismatch,
)
from .perm import GroupSpec, PermutationGroup, _is_prime, even_subgroup, named_group
from .poly import CycleIndex, IntPoly, RatPoly, compose, integer_roots, negative_root_run, rising_factorial

BRUTEFORCE_LIMIT = 10**7


def cycle_polynomial(G: PermutationGroup) -> IntPoly:
    """``sum over g of x^c(g)``."""
    counts = [0] * (G.degree + 1)
    for g in G.elements:
        counts[g.cycle_count()] += 1
    return IntPoly(counts)


def cycle_index(G: PermutationGroup) -> CycleIndex:
    return CycleIndex(G.degree, dict(Counter(g.cycle_type() for g in G.elements)))


def fixed_point_polynomial(Z: CycleIndex) -> IntPoly:
    """``Z(x, 1, ..., 1)``."""
    out = [0] * (Z.degree + 1)
    for exps, coef in Z.terms.items():
        out[exps[0]] += coef
    return IntPoly(out)


def parker_vector(Z: CycleIndex, order: int, conventional: bool = False) -> list[Fraction]:
    """Average number of ``k``-cycles per element, ``k = 1..n``.

    With ``conventional=True`` entry ``k`` is multiplied by ``k``, giving the
    number of orbits on ``k``-cycles.
    """
    if Z.total() != order:
        raise OrderMismatch(f"cycle index sums to {Z.total()}, not {order}")
    return [
        Fraction(Z.partial_at_ones(k) * (k if conventional else 1), order)
        for k in range(1, Z.degree + 1)
    ]


# --------------------------------------------------------------- closed forms


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def cyclic_closed_form(n: int) -> IntPoly:
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        if n % d == 0:
            out[n // d] += totient(d)
    return IntPoly(out)


def dihedral_closed_form(n: int) -> IntPoly:
    # rotations plus reflections; for even n half the reflections fix two vertices
    P = cyclic_closed_form(n)
    if n % 2:
        return P + IntPoly.monomial((n + 1) // 2, n)
    return P + IntPoly.monomial(n // 2 + 1, n // 2) + IntPoly.monomial(n // 2, n // 2)


def alternating_closed_form(n: int) -> IntPoly:
    """Even part of the symmetric group's cycle polynomial."""
    F = rising_factorial(n)
    sign = -1 if n % 2 else 1
    return (F + F.reflect() * sign).content_divide(2)


def pgl2_closed_form(p: int) -> IntPoly:
    x2 = IntPoly.monomial(2)
    return (
        cyclic_closed_form(p + 1) * (p * (p - 1) // 2)
        + x2 * cyclic_closed_form(p - 1) * (p * (p + 1) // 2)
        + (x2 - IntPoly.monomial(p + 1)) * (p * p - 1)
    )


def wreath_closed_form(inner_F: IntPoly, inner_order: int, outer_F: IntPoly, m: int) -> IntPoly:
    """``|G|^m * F_H(F_G(x) / |G|)``."""
    scaled = RatPoly(inner_F.coeffs) * Fraction(1, inner_order)
    composed = compose(RatPoly(outer_F.coeffs), scaled) * (inner_order**m)
    if not composed.is_integral():
        raise NonIntegralWreathComposition("wreath composition left a denominator")
    return composed.to_int_poly()


def _spec_order(spec: GroupSpec) -> int:
    k, a = spec.kind, spec.args
    if k == "S":
        return factorial(a[0])
    if k == "A":
        return max(1, factorial(a[0]) // 2)
    if k == "C":
        return a[0]
    if k == "D":
        return 2 * a[0]
    if k == "T":
        return 1
    if k == "PGL2":
        return a[0] ** 3 - a[0]
    if k == "prod":
        out = 1
        for s in a:
            out *= _spec_order(s)
        return out
    if k == "wr":
        return _spec_order(a[0]) ** a[1].degree() * _spec_order(a[1])
    return named_group(spec).order


def closed_form(spec: GroupSpec) -> IntPoly:
    """Cycle polynomial from its formula, without enumerating the group.

    ``gens`` specs and other unnamed leaves fall back to enumeration.
    """
    k, a = spec.kind, spec.args
    if k == "S":
        return rising_factorial(a[0])
    if k == "A":
        return alternating_closed_form(a[0])
    if k == "C":
        return cyclic_closed_form(a[0])
    if k == "D":
        return dihedral_closed_form(a[0])
    if k == "T":
        return IntPoly.monomial(a[0])
    if k == "PGL2":
        if a[0] == 2 or not _is_prime(a[0]):
            raise NotPrime(f"PGL2 needs an odd prime, got {a[0]}")
        return pgl2_closed_form(a[0])
    if k == "prod":
        out = IntPoly([1])
        for s in a:
            out = out * closed_form(s)
        return out
    if k == "wr":
        inner, outer = a
        return wreath_closed_form(closed_form(inner), _spec_order(inner), closed_form(outer), outer.degree())
    return cycle_polynomial(named_group(spec))


# ------------------------------------------------------------ orbit counting


def orbit_count_colorings(G: PermutationGroup, a: int, mode: str = "burnside") -> int:
    """Number of ``G``-orbits on ``a``-colourings of the points."""
    if a < 1:
        raise ArgMismatch("need at least one colour")
    if mode == "burnside":
        value = cycle_polynomial(G)(a)
        q, r = divmod(value, G.order)
        if r:
            raise NonDivisible(f"F({a}) = {value} not divisible by {G.order}")
        return q
    if mode != "bruteforce":
        raise ArgMismatch(f"unknown mode {mode!r}")
    n = G.degree
    total = a**n
    if total > BRUTEFORCE_LIMIT:
        raise BruteforceTooLarge(f"{a}^{n} colourings exceeds {BRUTEFORCE_LIMIT}")
    codes = np.arange(total, dtype=np.int64)
    digits = np.empty((total, n), dtype=np.int64)
    rest = codes.copy()
    for i in range(n):
        digits[:, i] = rest % a
        rest //= a
    return _count_components(digits, a, G)


def _count_components(digits: np.ndarray, a: int, G: PermutationGroup, codes=None) -> int:
    """Orbits of the generators on colourings given as digit rows.

    ``codes`` lists the base-``a`` code of each row when the rows are a
    subset of all colourings.
    """
    n = G.degree
    weights = a ** np.arange(n, dtype=np.int64)
    if codes is None:
        codes = digits @ weights
        lookup = None
    else:
        lookup = np.argsort(codes)
    rows, cols = [], []
    src = np.arange(len(digits))
    for g in G.generators:
        # colouring c moves to c∘g^-1: point g(i) receives colour c(i)
        moved = np.empty_like(digits)
        moved[:, list(g.images)] = digits
        image = moved @ weights
        if lookup is not None:
            image = lookup[np.searchsorted(codes, image, sorter=lookup)]
        rows.append(src)
        cols.append(image)
    if not rows:
        return len(digits)
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(len(digits), len(digits)))
    count, _ = connected_components(graph, directed=True, connection="weak")
    return int(count)


# ------------------------------------------------------------------ identities


@dataclass
class IdentityReport:
    identity: str
    passed: bool
    detail: str = ""
    witness: object = None
    data: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


def check_parity(G: PermutationGroup) -> IdentityReport:
    """``F(-x) = (-1)^n F(x)`` whenever ``G`` has no odd permutation."""
    F = cycle_polynomial(G)
    n = G.degree
    if G.has_odd():
        return IdentityReport("parity", True, "group has odd permutations; identity not claimed")
    bad = [k for k, c in enumerate(F.coeffs) if c and (k - n) % 2]
    ok = F.reflect() == (F if n % 2 == 0 else -F) and not bad
    return IdentityReport("parity", ok, witness=bad[0] if bad else None)


def check_negative_run(G: PermutationGroup) -> IdentityReport:
    """Negative integer roots of ``F`` are exactly ``-1, ..., -a``."""
    F = cycle_polynomial(G)
    roots = integer_roots(F)
    negative = sorted(r for r in roots if r < 0)
    run = negative_root_run(F)
    ok = negative == list(range(-run, 0))
    if G.has_odd():
        ok = ok and run >= 1
    else:
        ok = ok and run == 0
    return IdentityReport("negative_run_contiguous", ok, witness=negative, data={"run": run})


def check_overgroup(G1: PermutationGroup, G2: PermutationGroup, a_max: int | None = None) -> IdentityReport:
    """Roots ``-a`` of a subgroup's cycle polynomial persist in the overgroup."""
    if not G1.is_subgroup_of(G2):
        raise ArgMismatch("first group is not a subgroup of the second")
    F1, F2 = cycle_polynomial(G1), cycle_polynomial(G2)
    a_max = a_max if a_max is not None else G1.degree + 1
    for a in range(1, a_max + 1):
        if F1(-a) == 0 and F2(-a) != 0:
            return IdentityReport("overgroup", False, witness=a)
    return IdentityReport("overgroup", True)


def check_divisibility(G: PermutationGroup, lo: int = -10, hi: int = 10) -> IdentityReport:
    F = cycle_polynomial(G)
    for a in range(lo, hi + 1):
        if F(a) % G.order:
            return IdentityReport("divisibility", False, witness=a)
    return IdentityReport("divisibility", True)


def check_set_transitive_bound(G: PermutationGroup) -> IdentityReport:
    """``F(2) >= (n+1)|G|``; ``data['equality']`` records whether it is tight."""
    value = cycle_polynomial(G)(2)
    bound = (G.degree + 1) * G.order
    return IdentityReport(
        "set_transitive_bound",
        value >= bound,
        detail=f"F(2) = {value}, (n+1)|G| = {bound}",
        data={"value": value, "bound": bound, "equality": value == bound},
    )


def check_odd_theorem(G: PermutationGroup, a_max: int = 10) -> IdentityReport:
    """``0 <= (-1)^n F(-a) < F(a)`` for groups containing odd permutations,
    with equality at zero exactly when the even subgroup has as many orbits."""
    if not G.has_odd():
        raise ArgMismatch("group has no odd permutations")
    F = cycle_polynomial(G)
    N = even_subgroup(G)
    FN = cycle_polynomial(N)
    sign = -1 if G.degree % 2 else 1
    for a in range(1, a_max + 1):
        left = sign * F(-a)
        if not 0 <= left < F(a):
            return IdentityReport("odd_theorem", False, witness=a)
        same_orbits = FN(a) // N.order == F(a) // G.order
        if (left == 0) != same_orbits:
            return IdentityReport("odd_theorem", False, witness=a, detail="equality case mismatch")
    return IdentityReport("odd_theorem", True)


_IDENTITIES = {
    "parity": check_parity,
    "negative_run_contiguous": check_negative_run,
    "overgroup": check_overgroup,
    "divisibility": check_divisibility,
    "set_transitive_bound": check_set_transitive_bound,
    "odd_theorem": check_odd_theorem,
}


def verify_identity(name: str, *args, **kwargs) -> IdentityReport:
    try:
        check = _IDENTITIES[name]
    except KeyError:
        raise ArgMismatch(f"unknown identity {name!r}") from None
    try:
        return check(*args, **kwargs)
    except TypeError as exc:
        raise ArgMismatch(str(exc)) from exc
