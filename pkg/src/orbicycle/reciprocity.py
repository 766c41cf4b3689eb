"""Orbital chromatic polynomials and reciprocal pairs."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotInvariant, TooLarge
from .graphs import (
    Graph,
    chromatic_polynomial,
    complete_graph,
    is_invariant,
    join,
    null_graph,
    quotient,
    star_graph,
    transposition_counts,
)
from .group_polys import _count_components, cycle_polynomial
from .perm import PermutationGroup, cyclic_group, direct_product, symmetric_group, trivial_group, wreath_product
from .poly import IntPoly, falling_factorial

ORACLE_LIMIT = 10**5


def orbital_chromatic_polynomial(G: Graph, group: PermutationGroup, check: bool = True) -> IntPoly:
    """Sum of the chromatic polynomials of the quotients ``G/g``."""
    if check and not is_invariant(G, group):
        raise NotInvariant("group does not preserve the graph")
    cache: dict = {}
    counts: dict = {}
    for g in group.elements:
        q = quotient(G, g)
        if q.has_loop:
            continue
        key = (q.graph.n, q.graph.edges)
        counts[key] = counts.get(key, 0) + 1
    total = IntPoly()
    for key, mult in counts.items():
        if key not in cache:
            cache[key] = chromatic_polynomial(Graph(key[0], key[1]))
        total = total + cache[key] * mult
    return total


def reflected_cycle_polynomial(group: PermutationGroup) -> IntPoly:
    """``(-1)^n F(-x)``."""
    F = cycle_polynomial(group).reflect()
    return -F if group.degree % 2 else F


def orbit_count_proper_colorings(G: Graph, group: PermutationGroup, q: int) -> int:
    """Brute-force count of group orbits on proper ``q``-colourings."""
    n = G.n
    total = q**n
    if total > ORACLE_LIMIT:
        raise TooLarge(f"{q}^{n} colourings exceeds {ORACLE_LIMIT}")
    codes = np.arange(total, dtype=np.int64)
    digits = np.empty((total, n), dtype=np.int64)
    rest = codes.copy()
    for i in range(n):
        digits[:, i] = rest % q
        rest //= q
    proper = np.ones(total, dtype=bool)
    for i, j in G.edges:
        proper &= digits[:, i] != digits[:, j]
    digits = digits[proper]
    if not len(digits):
        return 0
    return _count_components(digits, q, group, codes=codes[proper])


def edge_lemma_holds(G: Graph, group: PermutationGroup) -> bool:
    """Edge count equals transpositions plus transpositions on non-edges."""
    t, t0 = transposition_counts(G, group)
    return G.m == t + t0


def edge_bound_filter(G: Graph, group: PermutationGroup | None = None) -> bool:
    """Necessary condition: complete, or at most ``(n-1)^2 / 2`` edges."""
    return G.is_complete() or 2 * G.m <= (G.n - 1) ** 2


@dataclass
class ReciprocityReport:
    graph: Graph
    group: str
    orbital: IntPoly
    reflected: IntPoly
    is_reciprocal: bool
    edge_lemma_holds: bool
    first_mismatch: int | None
    t: int
    t0: int

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "group": self.group,
            "orbital_poly": self.orbital.to_json(),
            "reflected_cycle_poly": self.reflected.to_json(),
            "is_reciprocal": self.is_reciprocal,
            "edge_lemma_holds": self.edge_lemma_holds,
            "first_mismatch": self.first_mismatch,
            "t": self.t,
            "t0": self.t0,
        }


def _describe(group: PermutationGroup) -> str:
    gens = ",".join(g.to_cycle_string() for g in group.generators)
    return f"gens({group.degree};{gens})"


def check_reciprocal(G: Graph, group: PermutationGroup, label: str | None = None) -> ReciprocityReport:
    if not is_invariant(G, group):
        raise NotInvariant("group does not preserve the graph")
    P = orbital_chromatic_polynomial(G, group, check=False)
    R = reflected_cycle_polynomial(group)
    mismatch = next(
        (k for k in range(max(P.degree, R.degree) + 1) if P[k] != R[k]),
        None,
    )
    t, t0 = transposition_counts(G, group)
    return ReciprocityReport(
        graph=G,
        group=label or _describe(group),
        orbital=P,
        reflected=R,
        is_reciprocal=mismatch is None,
        edge_lemma_holds=G.m == t + t0,
        first_mismatch=mismatch,
        t=t,
        t0=t0,
    )


def is_reciprocal(G: Graph, group: PermutationGroup) -> bool:
    return check_reciprocal(G, group).is_reciprocal


# ------------------------------------------------------------- star theorem


def tree_identity_holds(F: IntPoly) -> bool:
    """``x (F(x-1) + F(-x)) = F(-x)`` exactly."""
    reflected = F.reflect()
    return IntPoly([0, 1]) * (F.shift(-1) + reflected) == reflected


def star_theorem_condition(G: Graph, group: PermutationGroup) -> bool:
    """Odd star whose leaves pair up so that the group contains every pair swap
    and permutes the pairs."""
    n = G.n
    if n < 3 or n % 2 == 0 or not G.is_star():
        return False
    centre = next(v for v, d in enumerate(G.degrees()) if d == n - 1)
    swaps = set()
    for g in group.elements:
        if g.is_transposition():
            swaps.add(next(c for c in g.cycles() if len(c) == 2))
    leaves = [v for v in range(n) if v != centre]

    def matchings(free: list[int]):
        if not free:
            yield []
            return
        a = free[0]
        for b in free[1:]:
            if (min(a, b), max(a, b)) in swaps:
                rest = [v for v in free if v not in (a, b)]
                for tail in matchings(rest):
                    yield [(a, b)] + tail

    for matching in matchings(leaves):
        blocks = {frozenset(p) for p in matching}
        if all(frozenset(g(v) for v in b) in blocks for g in group.generators for b in blocks):
            return True
    return False


@dataclass
class StarTheoremReport:
    k: int
    order: int
    is_reciprocal: bool
    tree_identity: bool
    report: ReciprocityReport = field(repr=False)

    @property
    def passed(self) -> bool:
        return self.is_reciprocal and self.tree_identity


def star_pair(K: PermutationGroup) -> tuple[Graph, PermutationGroup]:
    """Star with ``2k`` leaves paired ``{1,2}, {3,4}, ...`` and ``C2 wr K``
    acting on the pairs, centre fixed."""
    k = K.degree
    group = direct_product(trivial_group(1), wreath_product(cyclic_group(2), K))
    return star_graph(2 * k), group


def check_star_theorem(k: int, K: PermutationGroup | None = None) -> StarTheoremReport:
    K = K if K is not None else trivial_group(k)
    if K.degree != k:
        raise ValueError(f"K must have degree {k}")
    G, group = star_pair(K)
    rep = check_reciprocal(G, group)
    return StarTheoremReport(
        k=k,
        order=group.order,
        is_reciprocal=rep.is_reciprocal,
        tree_identity=tree_identity_holds(cycle_polynomial(group)),
        report=rep,
    )


@dataclass
class JoinFamilyReport:
    m: int
    order: int
    is_reciprocal: bool
    factorization_holds: bool

    @property
    def passed(self) -> bool:
        return self.is_reciprocal and self.factorization_holds


def check_join_family(m: int) -> JoinFamilyReport:
    """``K_m`` joined to ``N_{m+1}`` with ``S_m x S_{m+1}``."""
    G = join(complete_graph(m), null_graph(m + 1))
    group = direct_product(symmetric_group(m), symmetric_group(m + 1))
    rep = check_reciprocal(G, group)
    shifted = IntPoly()
    for g in symmetric_group(m + 1).elements:
        shifted = shifted + IntPoly([-m, 1]) ** g.cycle_count()
    factored = falling_factorial(m) * shifted
    return JoinFamilyReport(m, group.order, rep.is_reciprocal, factored == rep.orbital)
