"""Simple undirected graphs on dense integer ids, plus I/O and structural helpers.

Adjacency is stored as one Python ``int`` bitmask per vertex.  Everything
here is immutable; operations return new graphs.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "GraphFormatError",
    "ContractionResult",
    "parse_graph",
    "emit_graph",
    "components",
    "induced_subgraph",
    "blocks",
    "block_edge_sets",
    "contract",
    "prism",
    "lex_product_k",
    "complement",
    "disjoint_union",
    "join",
    "complete",
    "empty",
    "path",
    "cycle",
    "complete_bipartite",
    "mask_of",
    "bits",
]


class GraphFormatError(ValueError):
    """Raised for malformed graph text or structurally invalid graphs."""


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  ``labels`` is a
    side channel that survives subgraph, contraction and product operations.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphFormatError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(v) for v in range(self.n)))
        elif len(self.labels) != self.n:
            raise GraphFormatError("labels must match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise GraphFormatError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphFormatError(f"vertex {v} has a neighbour out of range")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphFormatError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels else ())

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(row | (1 << v) == full for v, row in enumerate(self.adj))

    def is_connected(self) -> bool:
        return self.n > 0 and len(_component_masks(self.adj, self.full_mask)) == 1

    def relabel(self, labels: Iterable[str]) -> "Graph":
        return Graph(self.n, self.adj, tuple(labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class ContractionResult:
    graph: Graph
    contracted_vertex: int
    origin: dict[int, frozenset[int]]


# -- I/O ---------------------------------------------------------------------


def _graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 4 and data[1] != 126:
        return ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63), 4
    raise GraphFormatError("graph6 sizes above 258047 are not supported")


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="strict")
    if any(c < 63 or c > 126 for c in data):
        raise GraphFormatError("graph6 bytes must lie in 63..126")
    n, off = _graph6_size(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body length {len(body)} does not match n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def _emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise GraphFormatError("graph6 sizes above 258047 are not supported")
    acc = nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out).decode("ascii")


def _parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"bad header {lines[0]!r}") from None
    if n < 0:
        raise GraphFormatError("negative vertex count")
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"bad edge line {ln!r}") from None
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {ln!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"duplicate edge {key[0]} {key[1]} ignored", stacklevel=3)
            continue
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def parse_graph(text: str, format: str = "graph6") -> Graph:
    """Parse ``text`` as ``graph6`` or ``edge_list``."""
    if format == "graph6":
        return _parse_graph6(text)
    if format == "edge_list":
        return _parse_edge_list(text)
    raise ValueError(f"unknown format {format!r}")


def emit_graph(g: Graph, format: str = "graph6") -> str:
    if format == "graph6":
        return _emit_graph6(g)
    if format == "edge_list":
        return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])
    if format == "dot":
        lines = ["graph G {"]
        lines += [f'  {v} [label="{g.labels[v]}"];' for v in g.vertices]
        lines += [f"  {u} -- {v};" for u, v in g.edges()]
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown format {format!r}")


# -- structure ---------------------------------------------------------------


def _component_masks(adj: tuple[int, ...], mask: int) -> list[int]:
    comps = []
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


def components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components, ordered by minimum vertex id.

    With ``within``, components of the subgraph induced on those vertices
    (ids stay those of ``g``).
    """
    mask = g.full_mask if within is None else mask_of(within)
    return [frozenset(bits(c)) for c in _component_masks(g.adj, mask)]


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on ``sorted(keep)``, renumbered densely; labels carried over."""
    order = sorted(set(keep))
    index = {v: i for i, v in enumerate(order)}
    keep_mask = mask_of(order)
    adj = []
    for v in order:
        row = 0
        for u in bits(g.adj[v] & keep_mask):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(order), tuple(adj), tuple(g.labels[v] for v in order))


def _biconnected_edge_components(g: Graph) -> tuple[list[list[tuple[int, int]]], set[int]]:
    # Iterative Hopcroft-Tarjan.
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    comps: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(g.neighbors(w))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (parent, v):
                        break
                comps.append(comp)
        if root_children >= 2:
            cuts.add(root)
    return comps, cuts


def blocks(g: Graph) -> tuple[list[frozenset[int]], frozenset[int]]:
    """Blocks (maximal 2-connected pieces and bridges) and cutvertices.

    A single isolated vertex is reported as a trivial block.
    """
    if g.n == 0:
        return [], frozenset()
    if not g.is_connected():
        raise GraphFormatError("blocks() needs a connected graph")
    if g.n == 1:
        return [frozenset({0})], frozenset()
    comps, cuts = _biconnected_edge_components(g)
    vsets = [frozenset(v for e in comp for v in e) for comp in comps]
    vsets.sort(key=lambda s: sorted(s))
    return vsets, frozenset(cuts)


def block_edge_sets(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Edge sets of the blocks of ``g`` (edges as ``(min, max)``)."""
    comps, _ = _biconnected_edge_components(g)
    out = [frozenset((min(u, v), max(u, v)) for u, v in comp) for comp in comps]
    out.sort(key=lambda s: sorted(s))
    return out


def contract(g: Graph, r: Iterable[int]) -> ContractionResult:
    """Replace the connected vertex set ``r`` by a single vertex.

    The new vertex takes the position of ``min(r)``; all other vertices keep
    their relative order.
    """
    r = frozenset(r)
    if not r:
        raise GraphFormatError("cannot contract an empty set")
    if len(components(g, r)) != 1:
        raise GraphFormatError("contracted set must induce a connected subgraph")
    rep = min(r)
    order = [v for v in g.vertices if v not in r or v == rep]
    index = {v: i for i, v in enumerate(order)}
    for v in r:
        index[v] = index[rep]
    r_mask = mask_of(r)
    r_nbrs = 0
    for v in r:
        r_nbrs |= g.adj[v]
    r_nbrs &= ~r_mask
    n2 = len(order)
    adj = [0] * n2
    for v in order:
        src = r_nbrs if v == rep else g.adj[v]
        row = 0
        for u in bits(src):
            row |= 1 << index[u]
        row &= ~(1 << index[v])
        adj[index[v]] = row
    labels = [g.labels[v] for v in order]
    if len(r) > 1:
        labels[index[rep]] = "{" + ",".join(g.labels[v] for v in sorted(r)) + "}"
    origin = {index[v]: (r if v == rep else frozenset({v})) for v in order}
    return ContractionResult(Graph(n2, tuple(adj), tuple(labels)), index[rep], origin)


def prism(g: Graph) -> Graph:
    """Cartesian product with K2: vertex ``(v, side)`` gets id ``v + side*n``."""
    n = g.n
    adj = [row | (1 << (v + n)) for v, row in enumerate(g.adj)]
    adj += [(row << n) | (1 << v) for v, row in enumerate(g.adj)]
    labels = list(g.labels) + [lab + "'" for lab in g.labels]
    return Graph(2 * n, tuple(adj), tuple(labels))


def lex_product_k(g: Graph, k: int) -> Graph:
    """Lexicographic product g[K_k]; vertex ``(v, i)`` gets id ``v*k + i``."""
    if k < 1:
        raise ValueError("k must be positive")
    block = (1 << k) - 1
    adj = []
    for v in g.vertices:
        blown = 0
        for u in bits(g.adj[v]):
            blown |= block << (u * k)
        for i in range(k):
            own = (block << (v * k)) & ~(1 << (v * k + i))
            adj.append(blown | own)
    labels = [f"{lab}.{i}" if k > 1 else lab for lab in g.labels for i in range(k)]
    return Graph(g.n * k, tuple(adj), tuple(labels))


# -- constructors ------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)), g.labels)


def disjoint_union(*gs: Graph) -> Graph:
    adj: list[int] = []
    off = 0
    for h in gs:
        adj += [row << off for row in h.adj]
        off += h.n
    return Graph(off, tuple(adj))


def join(*gs: Graph) -> Graph:
    """Join: disjoint union plus every edge between different parts."""
    total = sum(h.n for h in gs)
    full = (1 << total) - 1
    adj: list[int] = []
    off = 0
    for h in gs:
        part = ((1 << h.n) - 1) << off
        adj += [(row << off) | (full & ~part) for row in h.adj]
        off += h.n
    return Graph(total, tuple(adj))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))
