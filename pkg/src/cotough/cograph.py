"""Cograph (P4-free graph) recognition, cotrees and cograph generators."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union as TUnion

from .graph import Graph, _component_masks, bits, complement, mask_of

__all__ = [
    "Leaf",
    "Union",
    "Join",
    "Cotree",
    "P4Witness",
    "recognize",
    "is_p4_free_oracle",
    "neighbor_saturation_check",
    "realize",
    "cotree_from_json",
    "enumerate_cotrees",
    "enumerate_cographs",
    "random_cotree",
    "random_cograph",
    "NotCographError",
    "require_cotree",
]


@dataclass(frozen=True)
class Leaf:
    vertex: int

    @property
    def size(self) -> int:
        return 1

    def leaves(self) -> list[int]:
        return [self.vertex]

    def to_text(self) -> str:
        return str(self.vertex)

    def to_json(self) -> dict:
        return {"type": "leaf", "vertex": self.vertex}


@dataclass(frozen=True)
class _Inner:
    children: tuple

    _tag = "?"
    _name = "?"

    @property
    def size(self) -> int:
        return sum(c.size for c in self.children)

    def leaves(self) -> list[int]:
        return [v for c in self.children for v in c.leaves()]

    def to_text(self) -> str:
        return f"{self._tag}(" + ",".join(c.to_text() for c in self.children) + ")"

    def to_json(self) -> dict:
        return {"type": self._name, "children": [c.to_json() for c in self.children]}


@dataclass(frozen=True)
class Union(_Inner):
    """Disjoint union of the children."""

    _tag = "U"
    _name = "union"


@dataclass(frozen=True)
class Join(_Inner):
    """Join of the children: every cross pair is an edge."""

    _tag = "J"
    _name = "join"


Cotree = TUnion[Leaf, Union, Join]


@dataclass(frozen=True)
class P4Witness:
    """Induced path a-b-c-d."""

    a: int
    b: int
    c: int
    d: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def verify(self, g: Graph) -> bool:
        a, b, c, d = self.as_tuple()
        if len({a, b, c, d}) != 4:
            return False
        e = g.has_edge
        return e(a, b) and e(b, c) and e(c, d) and not (e(a, c) or e(a, d) or e(b, d))

    def to_json(self) -> dict:
        return {"p4": list(self.as_tuple())}


def _is_p4(g: Graph, a: int, b: int, c: int, d: int) -> bool:
    e = g.has_edge
    return e(a, b) and e(b, c) and e(c, d) and not (e(a, c) or e(a, d) or e(b, d))


def _find_p4(g: Graph, mask: int) -> P4Witness:
    for quad in itertools.combinations(list(bits(mask)), 4):
        for a, b, c, d in itertools.permutations(quad):
            if a < d and _is_p4(g, a, b, c, d):
                return P4Witness(a, b, c, d)
    raise AssertionError("connected and co-connected vertex set without an induced P4")


def recognize(g: Graph) -> Cotree | P4Witness:
    """Return a cotree realising ``g``, or an induced P4 if ``g`` is not a cograph.

    Recursively splits by components of the graph or of its complement.
    Children are ordered by their least vertex.
    """
    if g.n == 0:
        return Union(())
    co = complement(g).adj

    def build(mask: int) -> Cotree | P4Witness:
        if mask & (mask - 1) == 0:
            return Leaf(mask.bit_length() - 1)
        parts = _component_masks(g.adj, mask)
        node = Union
        if len(parts) == 1:
            parts = _component_masks(co, mask)
            node = Join
            if len(parts) == 1:
                return _find_p4(g, mask)
        children = []
        for p in parts:
            sub = build(p)
            if isinstance(sub, P4Witness):
                return sub
            children.append(sub)
        return node(tuple(children))

    return build(g.full_mask)


def is_p4_free_oracle(g: Graph) -> bool:
    """Exhaustive check over every 4-subset."""
    for quad in itertools.combinations(range(g.n), 4):
        for a, b, c, d in itertools.permutations(quad):
            if _is_p4(g, a, b, c, d):
                return False
    return True


def neighbor_saturation_check(g: Graph, s) -> bool:
    """True iff every vertex of ``s`` sees all or none of each component of ``g - s``."""
    s_mask = mask_of(s)
    comps = _component_masks(g.adj, g.full_mask & ~s_mask)
    for u in bits(s_mask):
        for comp in comps:
            seen = g.adj[u] & comp
            if seen and seen != comp:
                return False
    return True


def realize(tree: Cotree) -> Graph:
    """Graph whose vertices are the leaves of ``tree`` (which must be 0..n-1)."""
    leaves = tree.leaves()
    n = len(leaves)
    if sorted(leaves) != list(range(n)):
        raise ValueError("cotree leaves must be exactly 0..n-1")
    adj = [0] * n

    def walk(node) -> int:
        if isinstance(node, Leaf):
            return 1 << node.vertex
        masks = [walk(c) for c in node.children]
        if isinstance(node, Join):
            total = 0
            for m in masks:
                total |= m
            for m in masks:
                for v in bits(m):
                    adj[v] |= total & ~m
            return total
        total = 0
        for m in masks:
            total |= m
        return total

    walk(tree)
    return Graph(n, tuple(adj))


def cotree_from_json(obj: dict) -> Cotree:
    kind = obj["type"]
    if kind == "leaf":
        return Leaf(int(obj["vertex"]))
    children = tuple(cotree_from_json(c) for c in obj["children"])
    return {"union": Union, "join": Join}[kind](children)


# -- generators --------------------------------------------------------------
# Unlabelled shapes are nested tuples: () is a leaf, ("U", kids) / ("J", kids).

_LEAF = ()


@lru_cache(maxsize=None)
def _shapes(n: int, root: str) -> tuple:
    if n == 1:
        return (_LEAF,)
    child = "U" if root == "J" else "J"
    out = []

    def pick(remaining: int, max_key: tuple[int, int], acc: list) -> None:
        if remaining == 0:
            if len(acc) >= 2:
                out.append((root, tuple(acc)))
            return
        for size in range(min(remaining, max_key[0]), 0, -1):
            if size == n:
                continue
            options = _shapes(size, child)
            top = max_key[1] if size == max_key[0] else len(options) - 1
            for idx in range(top, -1, -1):
                pick(remaining - size, (size, idx), acc + [options[idx]])

    pick(n, (n, 0), [])
    return tuple(out)


def _shape_to_cotree(shape, counter: list[int]) -> Cotree:
    if shape == _LEAF:
        v = counter[0]
        counter[0] += 1
        return Leaf(v)
    tag, kids = shape
    node = Join if tag == "J" else Union
    return node(tuple(_shape_to_cotree(k, counter) for k in kids))


def enumerate_cotrees(n: int, connected: bool | None = None) -> Iterator[Cotree]:
    """Every cograph on ``n`` vertices up to isomorphism, as a cotree.

    ``connected=True`` restricts to join-rooted trees (plus K1),
    ``False`` to union-rooted ones, ``None`` yields both.
    """
    if n < 1:
        return
    if n == 1:
        if connected is not False:
            yield Leaf(0)
        return
    roots = {True: ("J",), False: ("U",), None: ("J", "U")}[connected]
    for root in roots:
        for shape in _shapes(n, root):
            yield _shape_to_cotree(shape, [0])


def enumerate_cographs(n: int, connected: bool | None = None) -> Iterator[Graph]:
    for tree in enumerate_cotrees(n, connected):
        yield realize(tree)


def random_cotree(n: int, rng: random.Random, p_join: float = 0.5, connected: bool = True) -> Cotree:
    """Random cotree on a shuffled vertex set.

    Starts from ``n`` single vertices and repeatedly merges two random pieces
    by join (probability ``p_join``) or disjoint union.  With
    ``connected=True`` the final merge is always a join.  Same-type nested
    nodes are flattened so the result alternates.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ids = list(range(n))
    rng.shuffle(ids)
    pieces: list[Cotree] = [Leaf(v) for v in ids]
    while len(pieces) > 1:
        i, j = sorted(rng.sample(range(len(pieces)), 2))
        b = pieces.pop(j)
        a = pieces.pop(i)
        use_join = rng.random() < p_join or (connected and not pieces)
        node = Join if use_join else Union
        kids = []
        for part in (a, b):
            kids.extend(part.children if isinstance(part, node) else (part,))
        pieces.append(node(tuple(kids)))
    return pieces[0]


def random_cograph(n: int, rng: random.Random, p_join: float = 0.5, connected: bool = True) -> Graph:
    return realize(random_cotree(n, rng, p_join, connected))


class NotCographError(ValueError):
    """Input contains an induced P4; ``witness`` holds it."""

    def __init__(self, witness: P4Witness):
        super().__init__(f"graph is not P4-free: induced path {witness.as_tuple()}")
        self.witness = witness


def require_cotree(g: Graph) -> Cotree:
    tree = recognize(g)
    if isinstance(tree, P4Witness):
        raise NotCographError(tree)
    return tree
