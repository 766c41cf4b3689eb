"""Subgroup lattices of enumerated permutation groups by cyclic extension.

Classes of subgroups under conjugation in the ambient group are found by
repeatedly joining a class representative ``R`` with a cyclic subgroup
``<g>``, where ``g`` has prime-power order and ``g^p`` already lies in ``R``.
Every subgroup is reached this way: adding the generators of ``K`` one
``p``-th root at a time builds a chain of such joins ending in ``K``.
Candidates ``g`` only matter up to conjugation by the normaliser of ``R``.

All work happens on index arrays into a sorted numpy element table.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass

import numpy as np
import pandas as pd

from .errors import OrderCapExceeded
from .perm import Permutation, PermutationGroup


_MARK_BUDGET = 2_000_000


def _prime_power_base(k: int) -> int:
    """The prime ``p`` when ``k = p^e`` with ``e >= 1``, else 0."""
    if k < 2:
        return 0
    p = next(d for d in range(2, k + 1) if k % d == 0)
    while k % p == 0:
        k //= p
    return p if k == 1 else 0


class ElementTable:
    """Vectorised view of a group: element ``i`` is row ``i`` of ``perms``."""

    def __init__(self, group: PermutationGroup):
        n = group.degree
        if n > 15:
            raise ValueError("element table packs points into 4 bits; degree must be <= 15")
        self.group = group
        self.degree = n
        raw = np.array([g.images for g in group.elements], dtype=np.int64).reshape(-1, n)
        self._weights = np.int64(16) ** np.arange(n, dtype=np.int64)
        keys = raw @ self._weights
        order = np.argsort(keys)
        self.perms = raw[order]
        self.keys = keys[order]
        self.size = len(self.keys)
        self._index = pd.Index(self.keys)
        self.inverse_perms = np.argsort(self.perms, axis=1)
        self.identity = int(self.lookup(np.arange(n, dtype=np.int64)[None, :])[0])
        self._powers()

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Element indices of permutation rows, which must lie in the group."""
        return self._index.get_indexer(rows @ self._weights)

    def compose_with(self, idx: np.ndarray, h: int) -> np.ndarray:
        """Indices of ``x * h`` for every ``x`` in ``idx``."""
        return self.lookup(self.perms[h][self.perms[idx]])

    def conjugates(self, s: int, by: np.ndarray) -> np.ndarray:
        """Indices of ``x^-1 s x`` for every ``x`` in ``by``."""
        inner = self.perms[s][self.inverse_perms[by]]
        return self.lookup(np.take_along_axis(self.perms[by], inner, axis=1))

    def conjugate_set(self, members: np.ndarray, x: int) -> np.ndarray:
        inner = self.perms[members][:, self.inverse_perms[x]]
        return self.lookup(self.perms[x][inner])

    def _powers(self) -> None:
        N, n = self.size, self.degree
        current = np.repeat(self.perms[self.identity][None, :], N, axis=0)
        idx_rows = np.arange(N)
        order = np.zeros(N, dtype=np.int64)
        power_idx = []
        k = 0
        while (order == 0).any():
            k += 1
            current = np.take_along_axis(self.perms, current, axis=1)  # g^k = g^(k-1) then g
            pk = self.lookup(current)
            power_idx.append(pk)
            hit = (pk == self.identity) & (order == 0)
            order[hit] = k
        self.order = order
        pows = np.stack(power_idx)  # pows[k-1, i] = index of g_i^k
        base = np.array([_prime_power_base(int(o)) for o in range(int(order.max()) + 1)])
        self.prime = base[order]
        pp = self.prime > 0
        pth = np.full(N, -1, dtype=np.int64)
        pth[pp] = pows[self.prime[pp] - 1, idx_rows[pp]]
        self.pth_power = pth
        self.powers = pows
        # canonical id of the cyclic subgroup: smallest index among its generators
        cyc = np.arange(N)
        for k in range(1, pows.shape[0] + 1):
            coprime = np.gcd(k, order) == 1
            cand = np.where(coprime & (k <= order), pows[k - 1], N)
            cyc = np.minimum(cyc, cand)
        self.cyclic_id = cyc
        # cycle-type codes for class invariants
        types: dict = {}
        codes = np.empty(N, dtype=np.int64)
        for i, row in enumerate(self.perms):
            ct = Permutation._trusted(tuple(int(v) for v in row)).cycle_type()
            codes[i] = types.setdefault(ct, len(types))
        self.type_code = codes
        self.type_count = len(types)

    def closure(self, gens: list[int], start: np.ndarray | None = None) -> np.ndarray:
        """Sorted member indices of the subgroup generated by ``gens``
        together with the subgroup ``start`` when given.

        Grows right cosets of ``start`` layer by layer, so each lookup call
        covers whole coset blocks.
        """
        base = np.array([self.identity]) if start is None else start
        mask = np.zeros(self.size, dtype=bool)
        mask[base] = True
        base_rows = self.perms[base]
        gen_rows = self.perms[gens]
        frontier = np.array([self.identity])
        while len(frontier):
            # products rep * s for every frontier rep and generator
            prod = gen_rows[np.arange(len(gens))[:, None, None], self.perms[frontier][None, :, :]]
            cand = np.unique(self.lookup(prod.reshape(-1, self.degree)))
            cand = cand[~mask[cand]]
            if not len(cand):
                break
            cosets = self.lookup(self.perms[cand][:, base_rows].reshape(-1, self.degree)).reshape(len(cand), len(base))
            canon = cosets.min(axis=1)
            _, first = np.unique(canon, return_index=True)
            mask[cosets[first].ravel()] = True
            frontier = cand[first]
        return np.flatnonzero(mask)

    def normaliser(self, members: np.ndarray, gens: list[int]) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[members] = True
        ok = np.ones(self.size, dtype=bool)
        everything = np.arange(self.size)
        for s in gens:
            ok &= mask[self.conjugates(s, everything)]
        return np.flatnonzero(ok)

    def to_group(self, members: np.ndarray) -> PermutationGroup:
        return PermutationGroup.from_elements(
            self.degree, [Permutation._trusted(tuple(int(v) for v in self.perms[i])) for i in members]
        )


@dataclass
class SubgroupClass:
    """A conjugacy class of subgroups: representative, class size, normaliser order."""

    members: np.ndarray
    gens: list[int]
    size: int
    normaliser_order: int
    table: ElementTable

    @property
    def order(self) -> int:
        return len(self.members)

    def representative(self) -> PermutationGroup:
        return self.table.to_group(self.members)


def _orbit_sizes(table: ElementTable, gens: list[int]) -> tuple:
    n = table.degree
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for i, j in enumerate(table.perms[g]):
            ri, rj = find(i), find(int(j))
            if ri != rj:
                parent[ri] = rj
    sizes = defaultdict(int)
    for i in range(n):
        sizes[find(i)] += 1
    return tuple(sorted(sizes.values()))


def subgroup_classes(group: PermutationGroup | ElementTable) -> list[SubgroupClass]:
    """Conjugacy classes of subgroups, trivial subgroup first, then by
    discovery order."""
    table = group if isinstance(group, ElementTable) else ElementTable(group)
    N = table.size
    everything = np.arange(N)

    def invariant(members, gens):
        counts = np.bincount(table.type_code[members], minlength=table.type_count)
        return (len(members), counts.tobytes(), _orbit_sizes(table, gens))

    def mask_key(members):
        mask = np.zeros(N, dtype=bool)
        mask[members] = True
        return np.packbits(mask).tobytes(), mask

    reps: list[dict] = []
    by_invariant: dict = defaultdict(list)
    exact: dict[bytes, int] = {}

    def register(members, gens):
        key, mask = mask_key(members)
        cid = len(reps)
        reps.append({"members": members, "gens": gens, "mask": mask})
        exact[key] = cid
        by_invariant[invariant(members, gens)].append(cid)
        return cid

    def conjugate_to(members, gens, cid) -> bool:
        target = reps[cid]["mask"]
        alive = everything
        for s in gens:
            alive = alive[target[table.conjugates(s, alive)]]
            if not len(alive):
                return False
        return True

    queue = deque([register(np.array([table.identity]), [])])
    normaliser_orders: dict[int, int] = {}
    while queue:
        cid = queue.popleft()
        rep = reps[cid]
        members, gens, mask = rep["members"], rep["gens"], rep["mask"]
        norm = table.normaliser(members, gens)
        normaliser_orders[cid] = len(norm)
        pth = table.pth_power
        eligible = (table.prime > 0) & ~mask
        eligible &= mask[np.where(pth >= 0, pth, table.identity)]
        candidates = np.flatnonzero(eligible)
        done = np.zeros(N, dtype=bool)
        for c in candidates:
            if done[c]:
                continue
            # elements x with <R, x> conjugate to <R, c> under the normaliser:
            # generators of <c^y>, and their products with R on either side
            orbit = np.unique(table.conjugates(int(c), norm))
            k = np.arange(1, table.order[c] + 1)
            ks = k[np.gcd(k, table.order[c]) == 1]
            twins = np.unique(table.powers[ks - 1][:, orbit].ravel())
            done[twins] = True
            if len(twins) * len(members) <= _MARK_BUDGET:
                rows = table.perms
                done[table.lookup(rows[twins][:, rows[members]].reshape(-1, table.degree))] = True
                done[table.lookup(rows[members][:, rows[twins]].reshape(-1, table.degree))] = True
            new_members = table.closure(gens + [int(c)], start=members)
            key, _ = mask_key(new_members)
            if key in exact:
                continue
            new_gens = gens + [int(c)]
            inv = invariant(new_members, new_gens)
            match = next((other for other in by_invariant.get(inv, ()) if conjugate_to(new_members, new_gens, other)), None)
            if match is not None:
                exact[key] = match
                continue
            queue.append(register(new_members, new_gens))

    return [
        SubgroupClass(r["members"], r["gens"], N // normaliser_orders[i], normaliser_orders[i], table)
        for i, r in enumerate(reps)
    ]


def expand_class(cls: SubgroupClass, ambient_gens: list[int]) -> list[np.ndarray]:
    """Every subgroup in the class, as sorted member arrays."""
    table = cls.table
    seen = {np.packbits(np.isin(np.arange(table.size), cls.members)).tobytes()}
    out = [cls.members]
    frontier = [cls.members]
    while frontier:
        nxt = []
        for members in frontier:
            for x in ambient_gens:
                conj = np.sort(table.conjugate_set(members, x))
                mask = np.zeros(table.size, dtype=bool)
                mask[conj] = True
                key = np.packbits(mask).tobytes()
                if key not in seen:
                    seen.add(key)
                    out.append(conj)
                    nxt.append(conj)
        frontier = nxt
    if len(out) != cls.size:
        raise AssertionError(f"class expansion found {len(out)} of {cls.size} conjugates")
    return out


def enumerate_subgroup_members(group: PermutationGroup, cap: int = 5040) -> tuple[ElementTable, list[np.ndarray]]:
    if group.order > cap:
        raise OrderCapExceeded(f"group of order {group.order} exceeds subgroup cap {cap}")
    table = ElementTable(group)
    ambient = [int(i) for i in table.lookup(np.array([g.images for g in group.generators], dtype=np.int64).reshape(-1, group.degree))]
    subgroups = []
    for cls in subgroup_classes(table):
        subgroups.extend(expand_class(cls, ambient))
    subgroups.sort(key=lambda m: (len(m), m.tolist()))
    return table, subgroups


def enumerate_subgroups(group: PermutationGroup, cap: int = 5040) -> list[PermutationGroup]:
    """All subgroups, each once, ordered by order then by member indices."""
    table, subgroups = enumerate_subgroup_members(group, cap)
    return [table.to_group(m) for m in subgroups]
