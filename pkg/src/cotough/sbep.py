"""SBEP subgraphs: connected graphs whose blocks are edges or even cycles,
with every vertex in at most two blocks.

``spanning_sbep`` builds one for any connected cograph of toughness at
least 1/2 by induction on the number of vertices, using a maximal tough-set
to either contract a nontrivial component or peel off a complete bipartite
piece.  Invariants the induction relies on are checked at runtime and raise
:class:`InvariantError` when broken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union as TUnion

from .cograph import neighbor_saturation_check, require_cotree
from .graph import Graph, block_edge_sets, components, contract, induced_subgraph
from .hamilton import cograph_ham_cycle
from .toughness import (
    NotTough,
    adjacency_count,
    at_least,
    find_tripartite_witness,
    is_minimal_cutset,
    maximal_tough_set,
    toughness_exact,
)

__all__ = [
    "Edge",
    "EvenCycle",
    "Block",
    "SbepGraph",
    "InvariantError",
    "validate_sbep",
    "single_block_vertices",
    "bipartite_sbep",
    "combine",
    "spanning_sbep",
    "sbep_from_json",
]

HALF = Fraction(1, 2)


class InvariantError(AssertionError):
    """A property guaranteed by the construction failed to hold."""


def _ensure(cond: bool, msg: str) -> None:
    if not cond:
        raise InvariantError(msg)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.u, self.v)

    def edges(self) -> list[tuple[int, int]]:
        return [(self.u, self.v)]

    def mapped(self, f) -> "Edge":
        return Edge(f(self.u), f(self.v))

    def to_json(self) -> dict:
        return {"type": "edge", "vs": [self.u, self.v]}


@dataclass(frozen=True)
class EvenCycle:
    vs: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.vs

    def edges(self) -> list[tuple[int, int]]:
        return [(self.vs[i - 1], self.vs[i]) for i in range(len(self.vs))]

    def mapped(self, f) -> "EvenCycle":
        return EvenCycle(tuple(f(v) for v in self.vs))

    def to_json(self) -> dict:
        return {"type": "cycle", "vs": list(self.vs)}


Block = TUnion[Edge, EvenCycle]


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SbepGraph:
    host: Graph
    blocks: tuple[Block, ...]

    @cached_property
    def membership(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, b in enumerate(self.blocks):
            for v in b.vertices:
                out.setdefault(v, []).append(i)
        return out

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.membership)

    def edge_set(self) -> set[tuple[int, int]]:
        return {_key(u, v) for b in self.blocks for u, v in b.edges()}

    def is_spanning(self) -> bool:
        return self.vertices == frozenset(self.host.vertices)

    def to_json(self) -> dict:
        return {"blocks": [b.to_json() for b in self.blocks]}


def sbep_from_json(host: Graph, obj: dict) -> SbepGraph:
    blocks: list[Block] = []
    for b in obj["blocks"]:
        vs = [int(v) for v in b["vs"]]
        if b["type"] == "edge":
            if len(vs) != 2:
                raise ValueError("edge block needs two vertices")
            blocks.append(Edge(vs[0], vs[1]))
        elif b["type"] == "cycle":
            blocks.append(EvenCycle(tuple(vs)))
        else:
            raise ValueError(f"unknown block type {b['type']!r}")
    return SbepGraph(host, tuple(blocks))


def validate_sbep(s: SbepGraph) -> bool:
    """Check every SBEP property directly from the block list."""
    g = s.host
    if not s.blocks:
        return False
    seen: set[tuple[int, int]] = set()
    for b in s.blocks:
        vs = b.vertices
        if any(not 0 <= v < g.n for v in vs) or len(set(vs)) != len(vs):
            return False
        if isinstance(b, EvenCycle) and (len(vs) < 4 or len(vs) % 2):
            return False
        for u, v in b.edges():
            if not g.has_edge(u, v) or _key(u, v) in seen:
                return False
            seen.add(_key(u, v))
    counts: dict[int, int] = {}
    for b in s.blocks:
        for v in b.vertices:
            counts[v] = counts.get(v, 0) + 1
    if max(counts.values()) > 2:
        return False
    if sum(1 for c in counts.values() if c == 1) < 2:
        return False
    # The blocks must be exactly the biconnected blocks of their union.
    order = sorted(counts)
    index = {v: i for i, v in enumerate(order)}
    union = Graph.from_edges(len(order), [(index[u], index[v]) for u, v in seen])
    if not union.is_connected():
        return False
    actual = {frozenset(es) for es in block_edge_sets(union)}
    claimed = {frozenset(_key(index[u], index[v]) for u, v in b.edges()) for b in s.blocks}
    return actual == claimed and len(actual) == len(s.blocks)


def single_block_vertices(s: SbepGraph) -> frozenset[int]:
    return frozenset(v for v, bs in s.membership.items() if len(bs) == 1)


def bipartite_sbep(g: Graph, x: Iterable[int], y: Iterable[int]) -> SbepGraph:
    """Spanning SBEP of the complete bipartite piece ``g[x, y]`` with every
    ``y`` vertex in a single block.

    One ``x`` vertex: a star.  Otherwise a cycle alternating through all of
    ``x`` and the first ``|x|`` of ``y``, then each leftover ``y`` vertex
    hangs off a different ``x`` vertex.
    """
    xs, ys = sorted(set(x)), sorted(set(y))
    if not xs or not ys or set(xs) & set(ys):
        raise ValueError("x and y must be disjoint and nonempty")
    if not len(xs) <= len(ys) <= 2 * len(xs):
        raise ValueError("need |x| <= |y| <= 2|x|")
    if any(not g.has_edge(a, b) for a in xs for b in ys):
        raise ValueError("g[x, y] is not complete bipartite")
    m = len(xs)
    if m == 1:
        blocks: list[Block] = [Edge(xs[0], b) for b in ys]
    else:
        ring = tuple(v for pair in zip(xs, ys[:m]) for v in pair)
        blocks = [EvenCycle(ring)] + [Edge(xs[i], b) for i, b in enumerate(ys[m:])]
    out = SbepGraph(g, tuple(blocks))
    _ensure(validate_sbep(out), "bipartite construction is not SBEP")
    _ensure(set(ys) <= single_block_vertices(out), "a y vertex lies in two blocks")
    return out


def _route(b: Block, start: int, end: int) -> list[int]:
    """Vertices of ``b`` from ``start`` to ``end`` without using edge start-end."""
    if isinstance(b, Edge):
        return [start, end]
    vs = list(b.vs)
    i = vs.index(start)
    vs = vs[i:] + vs[:i]
    if vs[1] == end:
        vs = [vs[0]] + vs[1:][::-1]
    _ensure(vs[-1] == end, "route endpoints are not adjacent on the cycle")
    return vs


def _block_with_edge(s: SbepGraph, e: tuple[int, int]) -> int:
    k = _key(*e)
    for i, b in enumerate(s.blocks):
        if any(_key(u, v) == k for u, v in b.edges()):
            return i
    raise ValueError(f"edge {e} is not in the SBEP graph")


def combine(s1: SbepGraph, s2: SbepGraph, e1: tuple[int, int], e2: tuple[int, int]) -> SbepGraph:
    """Merge disjoint SBEP graphs through edges ``x1y1`` of ``s1`` and ``x2y2`` of ``s2``.

    Needs host edges ``x1y2`` and ``x2y1``.  The two blocks holding the chosen
    edges become one even cycle; chosen cycle edges are dropped, chosen
    cutedges are kept.
    """
    g = s1.host
    if s2.host != g:
        raise ValueError("SBEP graphs must share a host")
    if s1.vertices & s2.vertices:
        raise ValueError("SBEP graphs must be vertex-disjoint")
    (x1, y1), (x2, y2) = e1, e2
    if not (g.has_edge(x1, y2) and g.has_edge(x2, y1)):
        raise ValueError("cross edges x1y2 and x2y1 must exist in the host")
    i1, i2 = _block_with_edge(s1, e1), _block_with_edge(s2, e2)
    ring = _route(s1.blocks[i1], y1, x1) + _route(s2.blocks[i2], y2, x2)
    merged = EvenCycle(tuple(ring))
    blocks = list(s1.blocks)
    blocks[i1] = merged
    blocks += [b for i, b in enumerate(s2.blocks) if i != i2]
    out = SbepGraph(g, tuple(blocks))
    before = {v: len(bs) for s in (s1, s2) for v, bs in s.membership.items()}
    after = {v: len(bs) for v, bs in out.membership.items()}
    _ensure(before == after, "combining changed a block count")
    _ensure(validate_sbep(out), "combined graph is not SBEP")
    return out


# -- main construction -------------------------------------------------------


def _lift(blocks: Iterable[Block], f) -> list[Block]:
    return [b.mapped(f) for b in blocks]


def _side_of_cut(blocks: list[Block], cut: int, first: int) -> set[int]:
    """Indices of blocks reachable from ``blocks[first]`` without passing ``cut``."""
    side = {first}
    todo = [first]
    while todo:
        i = todo.pop()
        for v in blocks[i].vertices:
            if v == cut:
                continue
            for j, b in enumerate(blocks):
                if j not in side and v in b.vertices:
                    side.add(j)
                    todo.append(j)
    return side


def _build(g: Graph) -> list[Block]:
    n = g.n
    if n == 2:
        return [Edge(0, 1)]
    t = toughness_exact(g).value
    _ensure(at_least(t, HALF), f"subproblem on {n} vertices fell below 1/2-tough")

    if at_least(t, 1):
        cyc = cograph_ham_cycle(g, require_cotree(g))
        _ensure(cyc is not None, "1-tough cograph without a hamiltonian cycle")
        if n % 2 == 0:
            return [EvenCycle(tuple(cyc))]
        return [Edge(cyc[i], cyc[i + 1]) for i in range(n - 1)]

    s = maximal_tough_set(g)
    rest = frozenset(g.vertices) - s
    comps = components(g, rest)
    _ensure(neighbor_saturation_check(g, s), "tough-set does not saturate its components")
    _ensure(all(adjacency_count(g, s, [u]) >= 2 for u in s), "tough-set vertex sees one component")
    nontrivial = [c for c in comps if len(c) > 1]

    if nontrivial:
        r = nontrivial[0]
        con = contract(g, r)
        gp, vr = con.graph, con.contracted_vertex
        rg = induced_subgraph(g, r)
        _ensure(at_least(toughness_exact(gp).value, t), "contraction lost toughness")
        _ensure(at_least(toughness_exact(rg).value, HALF), "component is not 1/2-tough")
        r_order = sorted(r)
        t_r = _lift(_build(rg), r_order.__getitem__)
        singles = sorted(single_block_vertices(SbepGraph(g, tuple(t_r))))
        x, y = singles[0], singles[1]
        t_p = _build(gp)
        at_vr = [i for i, b in enumerate(t_p) if vr in b.vertices]
        side = _side_of_cut(t_p, vr, at_vr[0]) if len(at_vr) == 2 else set(range(len(t_p)))
        out = list(t_r)
        for i, b in enumerate(t_p):
            stand_in = x if i in side else y
            out.append(b.mapped(lambda v: stand_in if v == vr else next(iter(con.origin[v]))))
        return out

    if is_minimal_cutset(g, s):
        _ensure(len(s) < len(rest) <= 2 * len(s), "bipartite case outside |S| < |V-S| <= 2|S|")
        return list(bipartite_sbep(g, s, rest).blocks)

    w = find_tripartite_witness(g, s)
    need = math.ceil(len(w.x_set) / t)
    _ensure(len(w.y_set) >= need + 1, "Y too small for the split into Y1 and Y2")
    _ensure(len(w.x_set) < need <= 2 * len(w.x_set), "|X| < |Y1| <= 2|X| violated")
    y1 = sorted(w.y_set)[:need]
    y2 = w.y_set - set(y1)
    t_r = bipartite_sbep(g, w.x_set, y1)
    keep = sorted(frozenset(g.vertices) - w.x_set - set(y1))
    gp = induced_subgraph(g, keep)
    _ensure(at_least(toughness_exact(gp).value, HALF), "remainder is not 1/2-tough")
    t_p = SbepGraph(g, tuple(_lift(_build(gp), keep.__getitem__)))
    xa, ya = next((u, v) if u in w.x_set else (v, u) for u, v in t_r.blocks[0].edges())
    z, yb = next(
        (u, v) if v in y2 else (v, u)
        for b in t_p.blocks
        for u, v in b.edges()
        if u in y2 or v in y2
    )
    _ensure(z in w.u_set, "Y2 vertex attached outside U")
    return list(combine(t_r, t_p, (xa, ya), (z, yb)).blocks)


def spanning_sbep(g: Graph) -> SbepGraph | NotTough:
    """Spanning SBEP subgraph of a cograph, or :class:`NotTough` evidence
    when its toughness is below 1/2.

    Raises :class:`~cotough.cograph.NotCographError` for non-cographs.
    """
    require_cotree(g)
    if g.n < 2:
        raise ValueError("spanning SBEP needs at least two vertices")
    res = toughness_exact(g)
    if not at_least(res.value, HALF):
        return NotTough(HALF, res)
    out = SbepGraph(g, tuple(_build(g)))
    _ensure(validate_sbep(out) and out.is_spanning(), "construction produced an invalid certificate")
    return out
