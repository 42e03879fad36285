"""Prism hamiltonian cycles from SBEP certificates, spanning k-walks, and
their validators.

A prism vertex is the pair ``(v, side)`` with side 0 or 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .cograph import require_cotree
from .graph import Graph, lex_product_k
from .hamilton import canonical_cycle, cograph_ham_cycle
from .sbep import Edge, InvariantError, SbepGraph, single_block_vertices, validate_sbep
from .toughness import NotTough, at_least, toughness_exact

__all__ = [
    "PrismCycle",
    "KWalk",
    "prism_cycle_from_sbep",
    "validate_prism_cycle",
    "two_walk_from_prism_cycle",
    "cograph_ham_cycle",
    "find_k_walk",
    "validate_k_walk",
    "canonical_walk",
]

PrismVertex = tuple[int, int]


@dataclass(frozen=True)
class PrismCycle:
    cycle: tuple[PrismVertex, ...]

    def to_json(self) -> dict:
        return {"cycle": [[v, side] for v, side in self.cycle]}


@dataclass(frozen=True)
class KWalk:
    k: int
    walk: tuple[int, ...]

    def to_json(self) -> dict:
        return {"k": self.k, "walk": list(self.walk)}


def _base_cycle(block) -> list[PrismVertex]:
    if isinstance(block, Edge):
        return [(block.u, 0), (block.v, 0), (block.v, 1), (block.u, 1)]
    # Cross every vertical edge, walking alternately on layer 1 and layer 0.
    out: list[PrismVertex] = []
    for i, v in enumerate(block.vs):
        out += [(v, 0), (v, 1)] if i % 2 == 0 else [(v, 1), (v, 0)]
    return out


def _open_at(cyc: list[PrismVertex], x: int) -> list[PrismVertex]:
    """Rotate/reverse so the cycle reads (x,0) ... (x,1); needs the vertical edge at x."""
    i = cyc.index((x, 0))
    rot = cyc[i:] + cyc[:i]
    if rot[1] == (x, 1):
        rot = [rot[0]] + rot[1:][::-1]
    if rot[-1] != (x, 1):
        raise InvariantError(f"vertical edge at {x} missing from partial cycle")
    return rot


def prism_cycle_from_sbep(s: SbepGraph) -> PrismCycle:
    """Hamiltonian cycle of the prism over an SBEP graph that uses the
    vertical edge at every single-block vertex.

    Each block gets its own cycle; blocks are then glued one at a time at
    shared cutvertices ``x`` by opening both cycles at ``x x'`` and joining
    the two paths end to end.
    """
    if not validate_sbep(s):
        raise ValueError("not a valid SBEP graph")
    blocks = list(s.blocks)
    done = {0}
    cyc = _base_cycle(blocks[0])
    covered = set(blocks[0].vertices)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for x in blocks[i].vertices:
            for j in s.membership[x]:
                if j in done:
                    continue
                done.add(j)
                queue.append(j)
                outer = _open_at(cyc, x)
                inner = _open_at(_base_cycle(blocks[j]), x)
                cyc = outer + inner[1:-1][::-1]
                covered.update(blocks[j].vertices)
    out = PrismCycle(tuple(cyc))
    if not validate_prism_cycle(s.host, out, vertices=covered, vertical_at=single_block_vertices(s)):
        raise InvariantError("prism cycle failed validation")
    return out


def validate_prism_cycle(
    g: Graph,
    c: PrismCycle,
    vertices: Iterable[int] | None = None,
    vertical_at: Iterable[int] = (),
) -> bool:
    """Hamiltonian cycle of the prism over ``g[vertices]`` (default: all of g),
    optionally required to use the vertical edge at each vertex of ``vertical_at``.
    """
    vs = set(range(g.n)) if vertices is None else set(vertices)
    seq = list(c.cycle)
    expected = {(v, side) for v in vs for side in (0, 1)}
    if len(seq) != len(expected) or set(seq) != expected or len(seq) < 4:
        return False
    used_vertical = set()
    for i in range(len(seq)):
        (u, a), (v, b) = seq[i - 1], seq[i]
        if u == v and a != b:
            used_vertical.add(u)
        elif not (a == b and g.has_edge(u, v)):
            return False
    return set(vertical_at) <= used_vertical


def _collapse(seq: list[int]) -> list[int]:
    out = [v for i, v in enumerate(seq) if v != seq[i - 1]]
    return out or seq[:1]


def canonical_walk(seq: list[int]) -> list[int]:
    return canonical_cycle(seq)


def two_walk_from_prism_cycle(c: PrismCycle) -> KWalk:
    """Drop the layer index; consecutive repeats (vertical edges) merge."""
    return KWalk(2, tuple(canonical_walk(_collapse([v for v, _ in c.cycle]))))


def validate_k_walk(g: Graph, w: KWalk) -> bool:
    """Spanning closed walk of ``g`` visiting every vertex 1..k times."""
    seq = list(w.walk)
    if w.k < 1 or not seq or any(not 0 <= v < g.n for v in seq):
        return False
    counts = [0] * g.n
    for v in seq:
        counts[v] += 1
    if min(counts) < 1 or max(counts) > w.k:
        return False
    if len(seq) == 1:
        return g.n == 1
    return all(g.has_edge(seq[i - 1], seq[i]) for i in range(len(seq)))


def _tree_walk(g: Graph) -> list[int]:
    """Closed walk around a BFS spanning tree (vertex v appears deg_T(v) times)."""
    parent = {0: None}
    children: dict[int, list[int]] = {v: [] for v in g.vertices}
    order = deque([0])
    while order:
        v = order.popleft()
        for u in g.neighbors(v):
            if u not in parent:
                parent[u] = v
                children[v].append(u)
                order.append(u)
    walk: list[int] = []

    def visit(v: int) -> None:
        walk.append(v)
        for u in children[v]:
            visit(u)
            walk.append(v)

    visit(0)
    return walk[:-1]


def find_k_walk(g: Graph, k: int) -> KWalk | NotTough:
    """Spanning k-walk of a connected cograph, or NotTough when it is below 1/k-tough.

    For k >= 2 this is a hamiltonian cycle of g[K_k] with the clique index
    dropped.  When k >= n - 1 a walk around a spanning tree already works.
    """
    if k < 1:
        raise ValueError("k must be positive")
    tree = require_cotree(g)
    if not g.is_connected():
        raise ValueError("find_k_walk expects a connected graph")
    n = g.n
    if n <= 2:
        return KWalk(k, tuple(range(n)))
    res = toughness_exact(g)
    if not at_least(res.value, Fraction(1, k)):
        return NotTough(Fraction(1, k), res)
    if k == 1:
        walk = cograph_ham_cycle(g, tree)
        if walk is None:
            raise InvariantError("1-tough cograph without a hamiltonian cycle")
    elif k >= n - 1:
        walk = _tree_walk(g)
    else:
        blown = lex_product_k(g, k)
        cyc = cograph_ham_cycle(blown, require_cotree(blown))
        if cyc is None:
            raise InvariantError("g[K_k] of a 1/k-tough cograph is not hamiltonian")
        walk = _collapse([x // k for x in cyc])
    out = KWalk(k, tuple(canonical_walk(walk)))
    if not validate_k_walk(g, out):
        raise InvariantError("k-walk failed validation")
    return out
