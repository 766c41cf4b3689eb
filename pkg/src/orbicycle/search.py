"""Exhaustive small-scale search for reciprocal pairs."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import DegreeTooLarge
from .graphs import Graph, automorphism_group
from .group_polys import cycle_polynomial
from .perm import Permutation, PermutationGroup
from .reciprocity import (
    check_reciprocal,
    edge_bound_filter,
    edge_lemma_holds,
    star_theorem_condition,
    tree_identity_holds,
)
from .subgroups import enumerate_subgroup_members, subgroup_classes

MAX_SEARCH_DEGREE = 8


@dataclass
class SearchConfig:
    n: int
    max_aut_order: int = 5040
    edge_bound: bool = True
    edge_lemma: bool = True
    threads: int = 1
    out: str | None = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_SEARCH_DEGREE:
            raise DegreeTooLarge(f"search supports 1 <= n <= {MAX_SEARCH_DEGREE}")
        if not 1 <= self.max_aut_order <= 10**4:
            raise ValueError("max_aut_order must lie in [1, 10^4]")

    @property
    def filters(self) -> bool:
        return self.edge_bound or self.edge_lemma


@dataclass
class PairCertificate:
    n: int
    edges: list[tuple[int, int]]
    group_generators: list[str]
    orbital_poly: list[str]
    cycle_poly: list[str]
    order: int
    filters: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "group_generators": self.group_generators,
            "group_order": self.order,
            "orbital_poly": self.orbital_poly,
            "cycle_poly": self.cycle_poly,
            "filters": self.filters,
        }

    @classmethod
    def from_json(cls, data: dict) -> PairCertificate:
        return cls(
            n=data["n"],
            edges=[tuple(e) for e in data["edges"]],
            group_generators=list(data["group_generators"]),
            orbital_poly=list(data["orbital_poly"]),
            cycle_poly=list(data["cycle_poly"]),
            order=data.get("group_order", 0),
            filters=data.get("filters", {}),
        )

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def group(self) -> PermutationGroup:
        from .specs import parse_permutation
        from .perm import group_from_generators

        return group_from_generators(self.n, [parse_permutation(self.n, s) for s in self.group_generators])

    def sort_key(self):
        return (canonical_bits(self.n, self.edges), self.order, self.group_generators)

    def verify(self) -> bool:
        return check_reciprocal(self.graph(), self.group()).is_reciprocal


# --------------------------------------------------------- graph enumeration


@lru_cache(maxsize=None)
def _pair_bits(n: int):
    """Pair ``k`` in lexicographic order owns bit ``P-1-k``, so comparing the
    integers compares edge strings lexicographically."""
    pairs = list(combinations(range(n), 2))
    P = len(pairs)
    return pairs, {p: P - 1 - k for k, p in enumerate(pairs)}


def _refine(cells: tuple[int, ...], u: int, adj: list[int]) -> tuple[int, int, tuple[int, ...]]:
    """Remove ``u`` and split every cell (a vertex bitmask) into
    non-neighbours then neighbours of ``u``.  Returns the row of ``u`` as
    bits, its length, and the refined cells."""
    row = length = 0
    out = []
    keep = ~(1 << u)
    nbrs = adj[u]
    for cell in cells:
        rest = cell & keep
        if not rest:
            continue
        near = rest & nbrs
        far = rest & ~nbrs
        size = rest.bit_count()
        row = (row << size) | ((1 << near.bit_count()) - 1)
        length += size
        if far:
            out.append(far)
        if near:
            out.append(near)
    return row, length, tuple(out)


def _members(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_bits(n: int, edges) -> int:
    """Smallest edge bitset over all relabelings.

    Labels are assigned in order.  With pairs ordered row by row, choosing
    label ``i`` fixes row ``i`` of the adjacency matrix and nothing after it
    can change that row, so the search keeps only the states whose prefix is
    minimal at each depth.  A state is an ordered partition of the unlabelled
    vertices; the next label comes from its first cell.  Twins (equal
    neighbourhoods apart from each other) give identical branches, so only
    one of them is tried.
    """
    if n <= 1:
        return 0
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    states = {((1 << n) - 1,)}
    prefix = 0
    for _ in range(n - 1):
        best_row = None
        nxt = set()
        for cells in states:
            tried = []
            for u in _members(cells[0]):
                if any(adj[u] & ~(1 << w) == adj[w] & ~(1 << u) for w in tried):
                    continue
                tried.append(u)
                row, length, refined = _refine(cells, u, adj)
                if best_row is None or row < best_row:
                    best_row, nxt = row, set()
                if row == best_row:
                    nxt.add(refined)
        prefix = (prefix << length) | best_row
        states = nxt
    return prefix


def graph_from_bits(n: int, bits: int) -> Graph:
    if n <= 1:
        return Graph(n)
    pairs, pos = _pair_bits(n)
    return Graph(n, [p for p in pairs if bits >> pos[p] & 1])


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class, ordered by
    canonical bitset."""
    if n > MAX_SEARCH_DEGREE:
        raise DegreeTooLarge(f"graph enumeration supports n <= {MAX_SEARCH_DEGREE}")
    if n <= 1:
        return [Graph(n)]
    pairs, pos = _pair_bits(n)
    level = {0}
    found = {0}
    while level:
        nxt = set()
        for bits in level:
            present = [p for p in pairs if bits >> pos[p] & 1]
            for p in pairs:
                if not bits >> pos[p] & 1:
                    nxt.add(canonical_bits(n, present + [p]))
        nxt -= found
        found |= nxt
        level = nxt
    return [graph_from_bits(n, b) for b in sorted(found)]


def _ahu(adj: list[set[int]], root: int, parent: int) -> str:
    return "(" + "".join(sorted(_ahu(adj, c, root) for c in adj[root] if c != parent)) + ")"


def tree_canonical(G: Graph) -> str:
    """Centre-rooted AHU encoding; equal strings mean isomorphic trees."""
    adj = G.adjacency()
    n = G.n
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_ahu(adj, c, -1) for c in layer)


def enumerate_trees(n: int) -> list[Graph]:
    """Free trees on ``n`` vertices up to isomorphism, grown leaf by leaf."""
    trees = {"()": Graph(1)}
    for size in range(2, n + 1):
        grown: dict[str, Graph] = {}
        for T in trees.values():
            for v in range(T.n):
                G = Graph(size, list(T.edges) + [(v, size - 1)])
                grown.setdefault(tree_canonical(G), G)
        trees = grown
    return [trees[k] for k in sorted(trees)]


# ------------------------------------------------------------------- search


def _search_graph(args) -> list[dict]:
    n, bits, cfg = args
    G = graph_from_bits(n, bits)
    aut = automorphism_group(G)
    table, subgroups = enumerate_subgroup_members(aut, cfg.max_aut_order)
    certs = []
    for members in subgroups:
        group = table.to_group(members)
        outcome = {}
        if cfg.edge_bound:
            outcome["edge_bound"] = edge_bound_filter(G, group)
            if not outcome["edge_bound"]:
                continue
        if cfg.edge_lemma:
            outcome["edge_lemma"] = edge_lemma_holds(G, group)
            if not outcome["edge_lemma"]:
                continue
        rep = check_reciprocal(G, group)
        if not rep.is_reciprocal:
            continue
        certs.append(
            PairCertificate(
                n=n,
                edges=G.sorted_edges(),
                group_generators=[g.to_cycle_string() for g in group.generators],
                orbital_poly=rep.orbital.to_json(),
                cycle_poly=cycle_polynomial(group).to_json(),
                order=group.order,
                filters=outcome,
            ).to_json()
        )
    return certs


def find_reciprocal_pairs(cfg: SearchConfig) -> list[PairCertificate]:
    graphs = enumerate_graphs(cfg.n)
    jobs = [(cfg.n, canonical_bits(cfg.n, G.edges), cfg) for G in graphs]
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(_search_graph, jobs))
    else:
        results = [_search_graph(job) for job in jobs]
    certs = [PairCertificate.from_json(c) for batch in results for c in batch]
    certs.sort(key=PairCertificate.sort_key)
    if cfg.out:
        write_certificates(certs, cfg.out)
    return certs


def write_certificates(certs: list[PairCertificate], path: str) -> None:
    with open(path, "w") as fh:
        json.dump([c.to_json() for c in certs], fh, indent=2)
        fh.write("\n")


def read_certificates(path: str) -> list[PairCertificate]:
    with open(path) as fh:
        return [PairCertificate.from_json(c) for c in json.load(fh)]


def default_threads() -> int:
    return os.cpu_count() or 1


# ------------------------------------------------------- tree classification


@dataclass
class TreeSurveyRow:
    """Outcome of every subgroup test on one tree.

    ``mode`` is ``"all"`` when each subgroup of the automorphism group was
    checked, or ``"classes"`` when the automorphism group exceeded the cap and
    one subgroup per conjugacy class was checked instead.
    """

    edges: list[tuple[int, int]]
    aut_order: int
    mode: str
    subgroups_checked: int
    reciprocal: int
    agreements: int
    identity_failures: int

    @property
    def passed(self) -> bool:
        return self.agreements == self.subgroups_checked and self.identity_failures == 0


def _tree_subgroups(aut: PermutationGroup, cap: int):
    if aut.order <= cap:
        table, subgroups = enumerate_subgroup_members(aut, cap)
        return "all", [table.to_group(m) for m in subgroups]
    return "classes", [cls.representative() for cls in subgroup_classes(aut)]


def survey_tree(G: Graph, cap: int = 5040) -> TreeSurveyRow:
    """Check that reciprocity agrees with the star condition for every
    subgroup of ``Aut(G)``, and that the tree identity holds whenever the
    pair is reciprocal.

    Both reciprocity and the star condition are unchanged by conjugating the
    group inside ``Aut(G)``, so class representatives suffice above the cap.
    """
    aut = automorphism_group(G)
    mode, groups = _tree_subgroups(aut, cap)
    recip = agree = bad_identity = 0
    for H in groups:
        is_recip = check_reciprocal(G, H).is_reciprocal
        agree += is_recip == star_theorem_condition(G, H)
        if is_recip:
            recip += 1
            bad_identity += not tree_identity_holds(cycle_polynomial(H))
    return TreeSurveyRow(G.sorted_edges(), aut.order, mode, len(groups), recip, agree, bad_identity)


def survey_trees(n: int, cap: int = 5040) -> list[TreeSurveyRow]:
    return [survey_tree(T, cap) for T in enumerate_trees(n)]
