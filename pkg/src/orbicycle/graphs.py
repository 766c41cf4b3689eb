"""Simple graphs, quotients by permutations, and chromatic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import BadSpec, DegreeMismatch, DegreeTooLargeForBruteForce, TooLarge
from .perm import Permutation, PermutationGroup
from .poly import IntPoly, falling_factorial

AUT_MAX_DEGREE = 12
BRUTEFORCE_LIMIT = 10**7


class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges=()):
        norm = set()
        for i, j in edges:
            if i == j:
                raise BadSpec(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise BadSpec(f"edge ({i}, {j}) out of range for n={n}")
            norm.add((min(i, j), max(i, j)))
        self.n = n
        self.edges = frozenset(norm)
        self._adj = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        if self._adj is None:
            adj = [set() for _ in range(self.n)]
            for i, j in self.edges:
                adj[i].add(j)
                adj[j].add(i)
            self._adj = adj
        return self._adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_star(self) -> bool:
        """A tree with one vertex adjacent to all others."""
        return self.is_tree() and (self.n <= 2 or max(self.degrees()) == self.n - 1)

    def relabel(self, p: Permutation) -> Graph:
        return Graph(self.n, ((p(i), p(j)) for i, j in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class QuotientGraph:
    """Graph on the cycles of a permutation, plus a flag for loops."""

    graph: Graph
    has_loop: bool
    cycles: tuple = ()


# ------------------------------------------------------------------- builders


@dataclass(frozen=True)
class GraphSpec:
    """``kind`` is one of ``K N Cyc Path Star Kmulti union join edges``."""

    kind: str
    args: tuple

    def __str__(self) -> str:
        if self.kind in ("K", "N", "Cyc", "Path", "Star"):
            return f"{self.kind}{self.args[0]}"
        if self.kind == "Kmulti":
            return "Kmulti(" + ",".join(map(str, self.args)) + ")"
        if self.kind in ("union", "join"):
            return f"{self.kind}(" + ",".join(map(str, self.args)) + ")"
        n, pairs = self.args
        return f"edges({n};" + ",".join(f"{i + 1}-{j + 1}" for i, j in pairs) + ")"


def _disjoint_union(parts: list[Graph]) -> tuple[Graph, list[int]]:
    edges = []
    offsets = []
    off = 0
    for g in parts:
        offsets.append(off)
        edges.extend((i + off, j + off) for i, j in g.edges)
        off += g.n
    return Graph(off, edges), offsets


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def null_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadSpec("cycle graph needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(k: int) -> Graph:
    """Centre 0 joined to leaves ``1..k``."""
    return Graph(k + 1, ((0, i) for i in range(1, k + 1)))


def complete_multipartite(*sizes: int) -> Graph:
    blocks = []
    off = 0
    for s in sizes:
        blocks.append(range(off, off + s))
        off += s
    edges = [(i, j) for a, b in combinations(blocks, 2) for i in a for j in b]
    return Graph(off, edges)


def disjoint_union(*parts: Graph) -> Graph:
    return _disjoint_union(list(parts))[0]


def join(left: Graph, right: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; left labels first."""
    g, (_, off) = _disjoint_union([left, right])
    extra = [(i, off + j) for i in range(left.n) for j in range(right.n)]
    return Graph(g.n, list(g.edges) + extra)


def build_graph(spec: GraphSpec) -> Graph:
    k, a = spec.kind, spec.args
    try:
        if k == "K":
            return complete_graph(a[0])
        if k == "N":
            return null_graph(a[0])
        if k == "Cyc":
            return cycle_graph(a[0])
        if k == "Path":
            return path_graph(a[0])
        if k == "Star":
            return star_graph(a[0])
        if k == "Kmulti":
            return complete_multipartite(*a)
        if k == "union":
            return disjoint_union(*(build_graph(s) for s in a))
        if k == "join":
            if len(a) != 2:
                raise BadSpec("join takes two graphs")
            return join(build_graph(a[0]), build_graph(a[1]))
        if k == "edges":
            n, pairs = a
            return Graph(n, pairs)
    except (IndexError, TypeError) as exc:
        raise BadSpec(f"malformed graph spec {spec}") from exc
    raise BadSpec(f"unknown graph kind {k!r}")


# ------------------------------------------------------------------- quotient


def quotient(G: Graph, g: Permutation) -> QuotientGraph:
    if g.degree != G.n:
        raise DegreeMismatch(f"permutation of degree {g.degree} on a graph with {G.n} vertices")
    cycles = g.cycles()
    label = [0] * G.n
    for c, cyc in enumerate(cycles):
        for v in cyc:
            label[v] = c
    edges = set()
    loop = False
    for i, j in G.edges:
        a, b = label[i], label[j]
        if a == b:
            loop = True
        else:
            edges.add((a, b) if a < b else (b, a))
    return QuotientGraph(Graph(len(cycles), edges), loop, cycles)


# -------------------------------------------------------- chromatic polynomial


def _components(n: int, adj: list[set[int]]) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _chromatic(n: int, edges: frozenset, stats: dict | None) -> IntPoly:
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + 1
    m = len(edges)
    if m == 0:
        return IntPoly.monomial(n)
    if m == n * (n - 1) // 2:
        return falling_factorial(n)
    adj = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    comps = _components(n, adj)
    if len(comps) > 1:
        out = IntPoly([1])
        for comp in comps:
            relabel = {v: k for k, v in enumerate(sorted(comp))}
            sub = frozenset((relabel[i], relabel[j]) for i, j in edges if i in relabel)
            out = out * _chromatic(len(comp), sub, stats)
        return out
    if m == n - 1:
        return IntPoly([0, 1]) * IntPoly([-1, 1]) ** (n - 1)
    # branch on the smallest edge at the smallest maximum-degree vertex
    top = max(len(a) for a in adj)
    v = next(i for i in range(n) if len(adj[i]) == top)
    w = min(adj[v])
    e = (min(v, w), max(v, w))
    deleted = _chromatic(n, edges - {e}, stats)
    return deleted - _chromatic(n - 1, _contract(edges, e), stats)


def _contract(edges: frozenset, e: tuple[int, int]) -> frozenset:
    keep, gone = e

    def lab(x: int) -> int:
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    out = set()
    for i, j in edges:
        if (i, j) == e:
            continue
        a, b = lab(i), lab(j)
        if a != b:
            out.add((a, b) if a < b else (b, a))
    return frozenset(out)


def chromatic_polynomial(G: Graph | QuotientGraph, stats: dict | None = None) -> IntPoly:
    """Chromatic polynomial by deletion-contraction.

    Pass a dict as ``stats`` to receive the recursion node count in
    ``stats['nodes']``.
    """
    if isinstance(G, QuotientGraph):
        if G.has_loop:
            return IntPoly()
        G = G.graph
    return _chromatic(G.n, G.edges, stats)


def count_proper_colorings_bruteforce(G: Graph, q: int) -> int:
    if q**G.n > BRUTEFORCE_LIMIT:
        raise TooLarge(f"{q}^{G.n} colourings exceeds {BRUTEFORCE_LIMIT}")
    edges = G.sorted_edges()
    return sum(1 for col in product(range(q), repeat=G.n) if all(col[i] != col[j] for i, j in edges))


# ---------------------------------------------------------------- symmetries


def automorphisms(G: Graph) -> list[Permutation]:
    """Every automorphism, found by backtracking over vertex images."""
    n = G.n
    if n > AUT_MAX_DEGREE:
        raise DegreeTooLargeForBruteForce(f"automorphism search limited to n <= {AUT_MAX_DEGREE}")
    adj = G.adjacency()
    deg = G.degrees()
    # map high-degree, well-connected vertices first to prune early
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        v = max(remaining, key=lambda u: (sum(1 for w in adj[u] if w in order), deg[u], -u))
        order.append(v)
        remaining.discard(v)
    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(k: int) -> None:
        if k == n:
            found.append(Permutation._trusted(tuple(image)))
            return
        v = order[k]
        for c in range(n):
            if used[c] or deg[c] != deg[v]:
                continue
            if any((w in adj[v]) != (image[w] in adj[c]) for w in order[:k]):
                continue
            image[v] = c
            used[c] = True
            extend(k + 1)
            used[c] = False
            image[v] = -1

    extend(0)
    return found


def automorphism_group(G: Graph) -> PermutationGroup:
    return PermutationGroup.from_elements(G.n, automorphisms(G))


def is_invariant(G: Graph, group: PermutationGroup) -> bool:
    if group.degree != G.n:
        return False
    return all(G.has_edge(g(i), g(j)) for g in group.generators for i, j in G.edges)


def transposition_counts(G: Graph, group: PermutationGroup) -> tuple[int, int]:
    """``(t, t0)``: transpositions in the group, and those swapping a non-edge."""
    if group.degree != G.n:
        raise DegreeMismatch(f"group of degree {group.degree} on {G.n} vertices")
    t = t0 = 0
    for g in group.elements:
        if g.is_transposition():
            t += 1
            i, j = next(c for c in g.cycles() if len(c) == 2)
            if not G.has_edge(i, j):
                t0 += 1
    return t, t0
