"""Brute-force ground truth.

Deliberately naive and self-contained: nothing here calls into the
constructive modules beyond reading a :class:`~cotough.graph.Graph`.
Every entry point has a size guard and refuses larger inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .graph import Graph

__all__ = [
    "OracleVerdict",
    "SizeGuardError",
    "oracle_hamiltonian",
    "oracle_prism_hamiltonian",
    "oracle_k_walk",
    "oracle_toughness",
]

MAX_HAM_VERTICES = 18
MAX_TOUGHNESS_VERTICES = 10


class SizeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class OracleVerdict:
    property: str
    holds: bool
    witness: Any = None


def _rows(n: int, edge) -> list[int]:
    rows = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and edge(u, v):
                rows[u] |= 1 << v
    return rows


def _connected(rows: list[int], mask: int) -> bool:
    if not mask:
        return True
    start = mask & -mask
    seen = start
    todo = [start.bit_length() - 1]
    while todo:
        v = todo.pop()
        new = rows[v] & mask & ~seen
        seen |= new
        while new:
            low = new & -new
            todo.append(low.bit_length() - 1)
            new ^= low
    return seen == mask


def _ham_cycle(rows: list[int]) -> list[int] | None:
    """Backtracking from vertex 0, pruning on low degree and disconnected leftovers."""
    n = len(rows)
    if n < 3:
        return None
    full = (1 << n) - 1
    # Twins (equal neighbourhoods apart from each other) are interchangeable
    # on any hamiltonian cycle, so only enter a twin after its lower twins.
    lower_twins = [0] * n
    for v in range(n):
        for u in range(v):
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                lower_twins[v] |= 1 << u
    walk = [0]

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(rows[v] & 1)
        rest = full & ~visited
        avail = rest | 1 | (1 << v)
        r = rest
        while r:
            low = r & -r
            r ^= low
            if (rows[low.bit_length() - 1] & avail).bit_count() < 2:
                return False
        if not _connected(rows, rest):
            return False
        options = []
        c = rows[v] & rest
        while c:
            low = c & -c
            c ^= low
            w = low.bit_length() - 1
            if lower_twins[w] & ~visited:
                continue
            options.append(((rows[w] & rest).bit_count(), w))
        for _, w in sorted(options):
            walk.append(w)
            if extend(w, visited | (1 << w)):
                return True
            walk.pop()
        return False

    return list(walk) if extend(0, 1) else None


def oracle_hamiltonian(g: Graph, kind: str = "cycle") -> OracleVerdict:
    """Hamiltonian cycle or path by backtracking (n <= 18)."""
    n = g.n
    if n > MAX_HAM_VERTICES:
        raise SizeGuardError(f"oracle_hamiltonian refuses n={n} > {MAX_HAM_VERTICES}")
    if kind == "cycle":
        cyc = _ham_cycle(_rows(n, g.has_edge))
        return OracleVerdict("hamiltonian_cycle", cyc is not None, cyc)
    if kind != "path":
        raise ValueError(f"unknown kind {kind!r}")
    if n == 0:
        return OracleVerdict("hamiltonian_path", False)
    if n == 1:
        return OracleVerdict("hamiltonian_path", True, [0])
    # A hamiltonian path of g is a hamiltonian cycle of g plus one universal vertex.
    hub = n
    cyc = _ham_cycle(_rows(n + 1, lambda u, v: u == hub or v == hub or g.has_edge(u, v)))
    if cyc is None:
        return OracleVerdict("hamiltonian_path", False)
    i = cyc.index(hub)
    return OracleVerdict("hamiltonian_path", True, cyc[i + 1:] + cyc[:i])


def oracle_prism_hamiltonian(g: Graph) -> OracleVerdict:
    """Hamiltonicity of G x K2; witness is a list of ``(v, side)`` pairs."""
    n = g.n
    if 2 * n > MAX_HAM_VERTICES:
        raise SizeGuardError(f"oracle_prism_hamiltonian refuses n={n} > {MAX_HAM_VERTICES // 2}")

    def edge(a: int, b: int) -> bool:
        (u, su), (v, sv) = divmod(a, 2), divmod(b, 2)
        if u == v:
            return su != sv
        return su == sv and g.has_edge(u, v)

    cyc = _ham_cycle(_rows(2 * n, edge))
    if cyc is None:
        return OracleVerdict("prism_hamiltonian", False)
    return OracleVerdict("prism_hamiltonian", True, [divmod(x, 2) for x in cyc])


def oracle_k_walk(g: Graph, k: int) -> OracleVerdict:
    """Spanning closed walk using each vertex at most ``k`` times.

    Decided by hamiltonicity of g[K_k]; graphs on one or two vertices are
    answered directly (a single vertex, or the walk u, v, u).
    """
    n = g.n
    if k < 1:
        raise ValueError("k must be positive")
    if n * k > MAX_HAM_VERTICES:
        raise SizeGuardError(f"oracle_k_walk refuses n*k={n * k} > {MAX_HAM_VERTICES}")
    prop = f"k_walk({k})"
    if n == 0:
        return OracleVerdict(prop, False)
    if n == 1:
        return OracleVerdict(prop, True, [0])
    if n == 2:
        ok = g.has_edge(0, 1)
        return OracleVerdict(prop, ok, [0, 1] if ok else None)

    def edge(a: int, b: int) -> bool:
        u, v = a // k, b // k
        return u == v or g.has_edge(u, v)

    cyc = _ham_cycle(_rows(n * k, edge))
    if cyc is None:
        return OracleVerdict(prop, False)
    walk = [x // k for x in cyc]
    walk = [v for i, v in enumerate(walk) if v != walk[i - 1]]
    return OracleVerdict(prop, True, walk)


def oracle_toughness(g: Graph):
    """Toughness by trying every vertex subset (n <= 10), no pruning.

    Returns ``(value, tough_set)``; value is ``None`` for complete graphs.
    """
    n = g.n
    if n > MAX_TOUGHNESS_VERTICES:
        raise SizeGuardError(f"oracle_toughness refuses n={n} > {MAX_TOUGHNESS_VERTICES}")
    best = None
    best_set = None
    for mask in range(1 << n):
        left = [v for v in range(n) if not mask >> v & 1]
        seen: set[int] = set()
        count = 0
        for v in left:
            if v in seen:
                continue
            count += 1
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                for y in left:
                    if y not in seen and g.has_edge(x, y):
                        seen.add(y)
                        stack.append(y)
        if count < 2:
            continue
        ratio = Fraction(n - len(left), count)
        if best is None or ratio < best:
            best = ratio
            best_set = frozenset(v for v in range(n) if mask >> v & 1)
    return best, best_set
