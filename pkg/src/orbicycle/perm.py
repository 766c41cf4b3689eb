"""Permutations and fully enumerated finite permutation groups.

Points are 0-indexed. Products read left to right: ``p * q`` applies ``p``
first and then ``q``, so ``(p * q)(i) == q(p(i))``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    DegreeTooSmall,
    NotPrime,
    OrderCapExceeded,
    PointOutOfRange,
    RepeatedPoint,
)

DEFAULT_ORDER_CAP = 10**6


def order_cap() -> int:
    """Closure cap, overridable through ``ORBICYCLE_ORDER_CAP``."""
    raw = os.environ.get("ORBICYCLE_ORDER_CAP")
    return int(raw) if raw else DEFAULT_ORDER_CAP


class Permutation:
    """A bijection of ``{0, ..., n-1}`` stored as its image tuple."""

    __slots__ = ("images", "_cycles", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._cycles = None
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> Permutation:
        p = cls.__new__(cls)
        p.images = images
        p._cycles = None
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other.images) != len(self.images):
            raise DegreeMismatch("cannot compose permutations of different degrees")
        return Permutation._trusted(tuple(map(other.images.__getitem__, self.images)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def conjugate(self, x: Permutation) -> Permutation:
        """Return ``x^-1 * self * x``."""
        return x.inverse() * self * x

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """All cycles including fixed points, each starting at its minimum,
        sorted by minimum element."""
        if self._cycles is None:
            seen = [False] * len(self.images)
            out = []
            for start in range(len(self.images)):
                if seen[start]:
                    continue
                cyc = []
                j = start
                while not seen[j]:
                    seen[j] = True
                    cyc.append(j)
                    j = self.images[j]
                out.append(tuple(cyc))
            self._cycles = tuple(out)
        return self._cycles

    def cycle_count(self) -> int:
        return len(self.cycles())

    def cycle_type(self) -> tuple[int, ...]:
        """``(c_1, ..., c_n)`` where ``c_i`` is the number of ``i``-cycles."""
        counts = [0] * len(self.images)
        for cyc in self.cycles():
            counts[len(cyc) - 1] += 1
        return tuple(counts)

    def sign(self) -> int:
        return -1 if (self.degree - self.cycle_count()) % 2 else 1

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if self.images else 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def is_transposition(self) -> bool:
        return self.cycle_count() == self.degree - 1

    def to_cycle_string(self) -> str:
        """1-indexed cycle notation, fixed points omitted, ``()`` for the identity."""
        parts = [
            "(" + " ".join(str(i + 1) for i in cyc) + ")"
            for cyc in self.cycles()
            if len(cyc) > 1
        ]
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string()}, n={self.degree})"


def perm_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a degree-``n`` permutation from disjoint 0-indexed cycles."""
    images = list(range(n))
    used: set[int] = set()
    for cyc in cycles:
        for pt in cyc:
            if not 0 <= pt < n:
                raise PointOutOfRange(f"point {pt} outside [0, {n})")
            if pt in used:
                raise RepeatedPoint(f"point {pt} appears twice")
            used.add(pt)
        for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
            images[a] = b
    return Permutation._trusted(tuple(images))


class PermutationGroup:
    """A permutation group with its complete element list.

    ``elements`` is in breadth-first order by word length in the generators,
    ties broken lexicographically by image tuple.
    """

    __slots__ = ("degree", "generators", "elements", "_index")

    def __init__(self, degree: int, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._index = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        if self._index is None:
            self._index = frozenset(e.images for e in self.elements)
        return p.images in self._index

    def element_set(self) -> frozenset:
        if self._index is None:
            self._index = frozenset(e.images for e in self.elements)
        return self._index

    def has_odd(self) -> bool:
        return any(g.sign() < 0 for g in self.generators)

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermutationGroup)
            and self.degree == other.degree
            and self.element_set() == other.element_set()
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.element_set()))

    def __repr__(self) -> str:
        gens = ", ".join(g.to_cycle_string() for g in self.generators)
        return f"PermutationGroup(n={self.degree}, order={self.order}, gens=[{gens}])"

    @classmethod
    def from_elements(cls, degree: int, elements) -> PermutationGroup:
        """Wrap a known-closed element set, choosing a small generating set.

        Generators are picked greedily in lexicographic order of images, so
        the result depends only on the set.
        """
        elems = sorted(set(Permutation._trusted(tuple(e)) if not isinstance(e, Permutation) else e
                           for e in elements))
        target = len(elems)
        gens: list[Permutation] = []
        have = {tuple(range(degree))}
        for e in elems:
            if e.images in have:
                continue
            gens.append(e)
            have = set(_closure_images(degree, [g.images for g in gens], target))
            if len(have) == target:
                break
        group = group_from_generators(degree, gens, cap=target)
        if group.order != target:
            raise ValueError("element set is not closed under composition")
        return group


def _closure_images(n: int, gens: list[tuple], cap: int) -> list[tuple]:
    ident = tuple(range(n))
    seen = {ident}
    order = [ident]
    layer = [ident]
    while layer:
        nxt = set()
        for x in layer:
            for g in gens:
                y = tuple(map(g.__getitem__, x))
                if y not in seen:
                    nxt.add(y)
        nxt.difference_update(seen)
        seen.update(nxt)
        if len(seen) > cap:
            raise OrderCapExceeded(f"closure exceeds cap {cap}")
        layer = sorted(nxt)
        order.extend(layer)
    return order


def group_from_generators(n: int, gens: Sequence[Permutation], cap: int | None = None) -> PermutationGroup:
    """Enumerate the group generated by ``gens`` by breadth-first closure."""
    if cap is None:
        cap = order_cap()
    for g in gens:
        if g.degree != n:
            raise DegreeMismatch(f"generator of degree {g.degree}, expected {n}")
    gens = [g for g in gens if not g.is_identity()]
    images = _closure_images(n, [g.images for g in gens], cap)
    return PermutationGroup(n, gens, [Permutation._trusted(im) for im in images])


def even_subgroup(G: PermutationGroup) -> PermutationGroup:
    """The subgroup of even permutations (``G`` itself if there are no odd ones)."""
    if not G.has_odd():
        return G
    return PermutationGroup.from_elements(G.degree, [g for g in G.elements if g.sign() > 0])


# ---------------------------------------------------------------- named groups


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _primitive_root(p: int) -> int:
    phi = p - 1
    factors = {d for d in range(2, phi + 1) if phi % d == 0 and _is_prime(d)}
    for a in range(2, p):
        if all(pow(a, phi // q, p) != 1 for q in factors):
            return a
    return 1


def symmetric_group(n: int) -> PermutationGroup:
    if n < 1:
        raise DegreeTooSmall("S(n) needs n >= 1")
    gens = []
    if n >= 2:
        gens.append(perm_from_cycles(n, [[0, 1]]))
    if n >= 3:
        gens.append(perm_from_cycles(n, [list(range(n))]))
    return group_from_generators(n, gens)


def alternating_group(n: int) -> PermutationGroup:
    if n < 1:
        raise DegreeTooSmall("A(n) needs n >= 1")
    gens = [perm_from_cycles(n, [[0, 1, i]]) for i in range(2, n)]
    return group_from_generators(n, gens)


def cyclic_group(n: int) -> PermutationGroup:
    if n < 1:
        raise DegreeTooSmall("C(n) needs n >= 1")
    return group_from_generators(n, [perm_from_cycles(n, [list(range(n))])])


def dihedral_group(n: int) -> PermutationGroup:
    """Symmetries of the regular ``n``-gon with vertices labeled cyclically."""
    if n < 3:
        raise DegreeTooSmall("D(n) needs n >= 3")
    rot = perm_from_cycles(n, [list(range(n))])
    refl = Permutation([(-i) % n for i in range(n)])
    return group_from_generators(n, [rot, refl])


def trivial_group(n: int) -> PermutationGroup:
    if n < 1:
        raise DegreeTooSmall("T(n) needs n >= 1")
    return group_from_generators(n, [])


def pgl2(p: int) -> PermutationGroup:
    """PGL(2, p) acting on the projective line; infinity is point ``p``."""
    if p == 2 or not _is_prime(p):
        raise NotPrime(f"PGL2 needs an odd prime, got {p}")
    inf = p

    def mobius(a: int, b: int, c: int, d: int) -> Permutation:
        images = []
        for x in range(p + 1):
            if x == inf:
                num, den = a, c
            else:
                num, den = (a * x + b) % p, (c * x + d) % p
            images.append(inf if den == 0 else num * pow(den, -1, p) % p)
        return Permutation(images)

    r = _primitive_root(p)
    gens = [mobius(1, 1, 0, 1), mobius(r, 0, 0, 1), mobius(0, 1, 1, 0)]
    return group_from_generators(p + 1, gens)


def direct_product(*groups: PermutationGroup) -> PermutationGroup:
    """Direct product acting on the disjoint union of the domains, in order."""
    total = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            images = list(range(total))
            for i, j in enumerate(g.images):
                images[offset + i] = offset + j
            gens.append(Permutation._trusted(tuple(images)))
        offset += G.degree
    return group_from_generators(total, gens)


def wreath_product(G: PermutationGroup, H: PermutationGroup) -> PermutationGroup:
    """Imprimitive action of ``G wr H`` on ``n*m`` points.

    Block ``j`` (a point of ``H``'s domain) holds points ``j*n .. j*n+n-1``.
    """
    n, m = G.degree, H.degree
    total = n * m
    gens = []
    for j in range(m):
        for g in G.generators:
            images = list(range(total))
            for i, k in enumerate(g.images):
                images[j * n + i] = j * n + k
            gens.append(Permutation._trusted(tuple(images)))
    for h in H.generators:
        images = [h.images[pt // n] * n + pt % n for pt in range(total)]
        gens.append(Permutation._trusted(tuple(images)))
    return group_from_generators(total, gens)


@dataclass(frozen=True)
class GroupSpec:
    """Symbolic description of a group; ``kind`` is one of
    ``S A C D T PGL2 prod wr gens``."""

    kind: str
    args: tuple

    def __str__(self) -> str:
        if self.kind in ("S", "A", "C", "D", "T"):
            return f"{self.kind}{self.args[0]}"
        if self.kind == "PGL2":
            return f"PGL2({self.args[0]})"
        if self.kind in ("prod", "wr"):
            return f"{self.kind}(" + ",".join(str(a) for a in self.args) + ")"
        n, gens = self.args
        return f"gens({n};" + ",".join(g.to_cycle_string() for g in gens) + ")"

    def degree(self) -> int:
        if self.kind in ("S", "A", "C", "D", "T"):
            return self.args[0]
        if self.kind == "PGL2":
            return self.args[0] + 1
        if self.kind == "prod":
            return sum(a.degree() for a in self.args)
        if self.kind == "wr":
            return self.args[0].degree() * self.args[1].degree()
        return self.args[0]


def S(n: int) -> GroupSpec:
    return GroupSpec("S", (n,))


def A(n: int) -> GroupSpec:
    return GroupSpec("A", (n,))


def C(n: int) -> GroupSpec:
    return GroupSpec("C", (n,))


def D(n: int) -> GroupSpec:
    return GroupSpec("D", (n,))


def T(n: int) -> GroupSpec:
    return GroupSpec("T", (n,))


def PGL2(p: int) -> GroupSpec:
    return GroupSpec("PGL2", (p,))


def Prod(*specs: GroupSpec) -> GroupSpec:
    return GroupSpec("prod", tuple(specs))


def Wr(inner: GroupSpec, outer: GroupSpec) -> GroupSpec:
    return GroupSpec("wr", (inner, outer))


def Gens(n: int, gens: Sequence[Permutation]) -> GroupSpec:
    return GroupSpec("gens", (n, tuple(gens)))


_BUILDERS = {
    "S": symmetric_group,
    "A": alternating_group,
    "C": cyclic_group,
    "D": dihedral_group,
    "T": trivial_group,
    "PGL2": pgl2,
}


def named_group(spec: GroupSpec) -> PermutationGroup:
    if spec.kind in _BUILDERS:
        return _BUILDERS[spec.kind](spec.args[0])
    if spec.kind == "prod":
        return direct_product(*(named_group(s) for s in spec.args))
    if spec.kind == "wr":
        return wreath_product(named_group(spec.args[0]), named_group(spec.args[1]))
    if spec.kind == "gens":
        n, gens = spec.args
        return group_from_generators(n, list(gens))
    raise ValueError(f"unknown group kind {spec.kind!r}")
