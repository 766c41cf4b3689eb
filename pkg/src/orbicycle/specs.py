"""Text grammars for group and graph specs (1-indexed cycles and edges).

Groups: ``S5 A4 C6 D4 T3 PGL2(7) prod(S3,C2) wr(S3,S2) gens(4;(1 2),(1 2 3 4))``.
Graphs: ``K5 N4 Cyc4 Path3 Star4 Kmulti(3,3) union(K3,K3) join(K2,N3)
edges(4;1-2,2-3,3-4)``.
"""

from __future__ import annotations

import re

from .errors import BadSpec
from .graphs import GraphSpec
from .perm import GroupSpec, Permutation, perm_from_cycles

_GROUP_ATOM = re.compile(r"^(S|A|C|D|T)(\d+)$")
_GRAPH_ATOM = re.compile(r"^(K|N|Cyc|Path|Star)(\d+)$")


def _split_args(body: str) -> list[str]:
    """Split on top-level commas."""
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise BadSpec(f"unbalanced parentheses in {body!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise BadSpec(f"unbalanced parentheses in {body!r}")
    parts.append("".join(cur))
    return parts


def _call(text: str) -> tuple[str, str] | None:
    m = re.match(r"^(\w+)\((.*)\)$", text, re.S)
    return (m.group(1), m.group(2)) if m else None


def parse_permutation(n: int, text: str) -> Permutation:
    """``(1 2)(3 4)`` in 1-indexed cycle notation; ``()`` is the identity."""
    text = text.strip()
    cycles = re.findall(r"\(([^()]*)\)", text)
    if re.sub(r"\([^()]*\)", "", text).strip():
        raise BadSpec(f"bad cycle notation {text!r}")
    parsed = []
    for body in cycles:
        tokens = body.replace(",", " ").split()
        try:
            parsed.append([int(t) - 1 for t in tokens])
        except ValueError as exc:
            raise BadSpec(f"bad point in {text!r}") from exc
    return perm_from_cycles(n, [c for c in parsed if c])


def parse_group(text: str) -> GroupSpec:
    s = text.strip()
    compact = re.sub(r"\s+", "", s)
    m = _GROUP_ATOM.match(compact)
    if m:
        return GroupSpec(m.group(1), (int(m.group(2)),))
    call = _call(s)
    if call is None:
        raise BadSpec(f"cannot parse group spec {text!r}")
    name, body = call[0], call[1]
    lname = name.lower()
    if lname == "pgl2":
        try:
            return GroupSpec("PGL2", (int(body.strip()),))
        except ValueError as exc:
            raise BadSpec(f"bad prime in {text!r}") from exc
    if lname == "prod":
        return GroupSpec("prod", tuple(parse_group(a) for a in _split_args(body)))
    if lname == "wr":
        args = _split_args(body)
        if len(args) != 2:
            raise BadSpec("wr takes two groups")
        return GroupSpec("wr", tuple(parse_group(a) for a in args))
    if lname == "gens":
        if ";" not in body:
            raise BadSpec("gens needs 'n; generators'")
        head, tail = body.split(";", 1)
        try:
            n = int(head.strip())
        except ValueError as exc:
            raise BadSpec(f"bad degree in {text!r}") from exc
        gens = [parse_permutation(n, g) for g in _split_args(tail) if g.strip()]
        return GroupSpec("gens", (n, tuple(gens)))
    raise BadSpec(f"unknown group {name!r}")


def parse_graph(text: str) -> GraphSpec:
    s = re.sub(r"\s+", "", text)
    m = _GRAPH_ATOM.match(s)
    if m:
        return GraphSpec(m.group(1), (int(m.group(2)),))
    call = _call(s)
    if call is None:
        raise BadSpec(f"cannot parse graph spec {text!r}")
    name, body = call
    lname = name.lower()
    if lname == "kmulti":
        try:
            return GraphSpec("Kmulti", tuple(int(a) for a in body.split(",")))
        except ValueError as exc:
            raise BadSpec(f"bad part sizes in {text!r}") from exc
    if lname in ("union", "join"):
        return GraphSpec(lname, tuple(parse_graph(a) for a in _split_args(body)))
    if lname == "edges":
        if ";" not in body:
            raise BadSpec("edges needs 'n; i-j, ...'")
        head, tail = body.split(";", 1)
        try:
            n = int(head)
            pairs = []
            for tok in filter(None, tail.split(",")):
                i, j = tok.split("-")
                pairs.append((int(i) - 1, int(j) - 1))
        except ValueError as exc:
            raise BadSpec(f"bad edge list in {text!r}") from exc
        return GraphSpec("edges", (n, tuple(pairs)))
    raise BadSpec(f"unknown graph {name!r}")
