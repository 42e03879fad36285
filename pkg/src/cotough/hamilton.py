"""Hamiltonian cycles of cographs from minimum path covers over the cotree.

For a join A + B with minimum path covers of p_A and p_B paths, a cover of
A + B needs max(1, p_A - |B|, p_B - |A|) paths, and A + B is hamiltonian
(on >= 3 vertices) iff p_A <= |B| and p_B <= |A|: alternate k paths of A
with k paths of B for k = max(p_A, p_B).
"""

from __future__ import annotations

from .cograph import Cotree, Join, Leaf, realize
from .graph import Graph

__all__ = ["min_path_cover", "cograph_ham_cycle", "canonical_cycle"]

Paths = list[list[int]]


def _split_to(paths: Paths, k: int) -> Paths:
    out = [list(p) for p in paths]
    i = 0
    while len(out) < k:
        while len(out[i]) < 2:
            i += 1
        head, tail = out[i][:1], out[i][1:]
        out[i:i + 1] = [head, tail]
    return out


def _join_cover(a: Paths, b: Paths) -> Paths:
    if len(a) < len(b):
        a, b = b, a
    nb = sum(len(p) for p in b)
    if len(a) > nb:
        singles = [v for p in b for v in p]
        merged = list(a[0])
        for i, v in enumerate(singles):
            merged += [v] + a[i + 1]
        return [merged] + [list(p) for p in a[nb + 1:]]
    b2 = _split_to(b, len(a))
    merged = []
    for pa, pb in zip(a, b2):
        merged += pa + pb
    return [merged]


def _cover(node) -> Paths:
    if isinstance(node, Leaf):
        return [[node.vertex]]
    covers = [_cover(c) for c in node.children]
    if isinstance(node, Join):
        acc = covers[0]
        for c in covers[1:]:
            acc = _join_cover(acc, c)
        return acc
    return [p for c in covers for p in c]


def min_path_cover(tree: Cotree) -> Paths:
    """A minimum set of vertex-disjoint paths covering the cograph."""
    return _cover(tree)


def canonical_cycle(seq: list[int]) -> list[int]:
    """Rotation/reflection of a cyclic sequence that is lexicographically least."""
    if not seq:
        return []
    best = None
    m = min(seq)
    for cand in (list(seq), list(reversed(seq))):
        for i, v in enumerate(cand):
            if v == m:
                rot = cand[i:] + cand[:i]
                if best is None or rot < best:
                    best = rot
    return best


def cograph_ham_cycle(g: Graph, tree: Cotree) -> list[int] | None:
    """Hamiltonian cycle of the cograph ``g`` (realised by ``tree``), or None."""
    if realize(tree) != g:
        raise ValueError("cotree does not realise the graph")
    if g.n < 3 or not isinstance(tree, Join):
        return None
    a = _cover(tree.children[0])
    rest = tree.children[1:]
    b = _cover(rest[0] if len(rest) == 1 else Join(tuple(rest)))
    na = tree.children[0].size
    nb = g.n - na
    if len(a) > nb or len(b) > na:
        return None
    k = max(len(a), len(b))
    cyc = []
    for pa, pb in zip(_split_to(a, k), _split_to(b, k)):
        cyc += pa + pb
    return canonical_cycle(cyc)
