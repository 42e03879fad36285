"""Exact toughness, tough-sets and the cutset structure used by the SBEP induction.

All ratios are :class:`fractions.Fraction`; infinite toughness (complete
graphs) is the distinct value :data:`INF`.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cograph import Join, Leaf, P4Witness, recognize
from .graph import Graph, _component_masks, bits, contract, induced_subgraph, mask_of

__all__ = [
    "Infinite",
    "INF",
    "ToughnessResult",
    "TripartiteWitness",
    "toughness_exact",
    "is_t_tough",
    "at_least",
    "maximal_tough_set",
    "tough_sets",
    "adjacency_count",
    "is_cutset",
    "is_minimal_cutset",
    "minimal_cutset_within",
    "find_tripartite_witness",
    "check_contraction_toughness",
    "lemma_bounds_hold",
    "format_ratio",
    "NotTough",
]


class Infinite(enum.Enum):
    INF = "inf"

    def __str__(self) -> str:
        return "inf"


INF = Infinite.INF


def at_least(value: Fraction | Infinite, t: Fraction | Infinite) -> bool:
    """``value >= t`` with ``INF`` above every rational."""
    if value is INF:
        return True
    if t is INF:
        return False
    return value >= t


def format_ratio(value: Fraction | Infinite) -> str:
    if value is INF:
        return "inf"
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class ToughnessResult:
    value: Fraction | Infinite
    witness: frozenset[int] | None

    @property
    def is_infinite(self) -> bool:
        return self.value is INF

    def to_json(self) -> dict:
        return {
            "toughness": format_ratio(self.value),
            "tough_set": None if self.witness is None else sorted(self.witness),
        }


@dataclass(frozen=True)
class TripartiteWitness:
    u_set: frozenset[int]
    x_set: frozenset[int]
    y_set: frozenset[int]

    def verify(self, g: Graph, s) -> bool:
        s = frozenset(s)
        u, x, y = self.u_set, self.x_set, self.y_set
        if not (u and x and y) or not u <= s or not x <= s - u or y & s:
            return False
        comps = _component_masks(g.adj, g.full_mask & ~mask_of(u))
        if len(comps) < 2 or mask_of(x | y) not in comps:
            return False
        for a, b in ((u, x), (u, y), (x, y)):
            if any(not g.has_edge(p, q) for p in a for q in b):
                return False
        return True


# -- counting helpers --------------------------------------------------------


def _n_comps(g: Graph, removed: int, within: int | None = None) -> int:
    base = g.full_mask if within is None else within
    return len(_component_masks(g.adj, base & ~removed))


def is_cutset(g: Graph, s, within: int | None = None) -> bool:
    return _n_comps(g, mask_of(s), within) >= 2


def _is_minimal_cutset_mask(g: Graph, s: int, within: int) -> bool:
    # s is an inclusion-minimal cutset iff every vertex of s sees every
    # component of the rest: putting back any vertex set then reconnects.
    comps = _component_masks(g.adj, within & ~s)
    if len(comps) < 2:
        return False
    return all(g.adj[u] & c for u in bits(s) for c in comps)


def is_minimal_cutset(g: Graph, s) -> bool:
    return _is_minimal_cutset_mask(g, mask_of(s), g.full_mask)


def _minimal_cutset_within_mask(g: Graph, s: int, within: int) -> int:
    changed = True
    while changed:
        changed = False
        for v in bits(s):
            if _n_comps(g, s & ~(1 << v), within) >= 2:
                s &= ~(1 << v)
                changed = True
                break
    return s


def minimal_cutset_within(g: Graph, s) -> frozenset[int]:
    """Greedily drop the least vertex that keeps ``s`` a cutset, until none can go."""
    m = mask_of(s)
    if _n_comps(g, m) < 2:
        raise ValueError("s is not a cutset")
    return frozenset(bits(_minimal_cutset_within_mask(g, m, g.full_mask)))


def adjacency_count(g: Graph, s, x) -> int:
    """Number of components of ``g - s`` adjacent to some vertex of ``x``."""
    s_mask, x_mask = mask_of(s), mask_of(x)
    if x_mask & ~s_mask:
        raise ValueError("x must be a subset of s")
    reach = 0
    for v in bits(x_mask):
        reach |= g.adj[v]
    return sum(1 for c in _component_masks(g.adj, g.full_mask & ~s_mask) if c & reach)


# -- cotree dynamic program --------------------------------------------------
# profile[c] = (k, mask): a smallest set (size k) whose removal leaves at least
# c components, or None when no removal does.


def _convolve(a: list, b: list) -> list:
    out: list = [None] * (len(a) + len(b) - 1)
    for i, ea in enumerate(a):
        if ea is None:
            continue
        for j, eb in enumerate(b):
            if eb is None:
                continue
            cand = out[i + j]
            cost = ea[0] + eb[0]
            if cand is None or cost < cand[0]:
                out[i + j] = (cost, ea[1] | eb[1])
    return out


def _profile(node) -> tuple[list, int]:
    if isinstance(node, Leaf):
        return [(0, 0), (0, 0)], 1 << node.vertex
    kids = [_profile(c) for c in node.children]
    full = 0
    for _, m in kids:
        full |= m
    if isinstance(node, Join):
        size = full.bit_count()
        prof: list = [(0, 0), (0, 0)] + [None] * (size - 1)
        for kp, km in kids:
            rest = full & ~km
            drop = rest.bit_count()
            for c in range(2, len(kp)):
                e = kp[c]
                if e is None:
                    continue
                cand = prof[c]
                if cand is None or drop + e[0] < cand[0]:
                    prof[c] = (drop + e[0], rest | e[1])
        return prof, full
    prof = kids[0][0]
    for kp, _ in kids[1:]:
        prof = _convolve(prof, kp)
    return prof, full


@lru_cache(maxsize=8192)
def _cograph_profile(g: Graph) -> list | None:
    tree = recognize(g)
    if isinstance(tree, P4Witness):
        return None
    if g.n == 0:
        return [(0, 0)]
    return _profile(tree)[0]


def _ratios(prof: list) -> list[tuple[Fraction, int, int]]:
    return [(Fraction(e[0], c), c, e[1]) for c, e in enumerate(prof) if c >= 2 and e is not None]


# -- exhaustive search for non-cographs --------------------------------------


def _search(g: Graph, collect_all: bool):
    """Cutsets by increasing size; stop once size/(n-size) exceeds the best ratio."""
    n = g.n
    best: Fraction | None = None
    found: list[int] = []
    for size in range(0, n - 1):
        bound = Fraction(size, n - size)
        if best is not None and (bound > best or (bound == best and not collect_all)):
            break
        for combo in itertools.combinations(range(n), size):
            m = mask_of(combo)
            c = _n_comps(g, m)
            if c < 2:
                continue
            r = Fraction(size, c)
            if best is None or r < best:
                best, found = r, [m]
            elif r == best and collect_all:
                found.append(m)
    return best, found


# -- public API --------------------------------------------------------------


def toughness_exact(g: Graph) -> ToughnessResult:
    """Minimum of ``|S| / c(G - S)`` over cutsets ``S``, with a witness.

    Cographs go through a dynamic program over the cotree; other graphs use
    pruned cutset enumeration.
    """
    if g.is_complete():
        return ToughnessResult(INF, None)
    prof = _cograph_profile(g)
    if prof is not None:
        ratios = _ratios(prof)
        best = min(r for r, _, _ in ratios)
        c, m = next((c, m) for r, c, m in ratios if r == best)
        return ToughnessResult(best, frozenset(bits(m)))
    best, found = _search(g, collect_all=False)
    return ToughnessResult(best, frozenset(bits(found[0])))


def is_t_tough(g: Graph, t) -> bool:
    if t is not INF:
        t = Fraction(t)
    return at_least(toughness_exact(g).value, t)


def tough_sets(g: Graph) -> list[frozenset[int]]:
    """All tough-sets of a non-complete graph (exhaustive; small graphs only)."""
    if g.is_complete():
        return []
    _, found = _search(g, collect_all=True)
    return [frozenset(bits(m)) for m in found]


def maximal_tough_set(g: Graph) -> frozenset[int]:
    """A tough-set of maximum cardinality, hence maximal under inclusion."""
    if g.is_complete():
        raise ValueError("complete graphs have no cutset")
    if not g.is_connected():
        raise ValueError("maximal_tough_set expects a connected graph")
    prof = _cograph_profile(g)
    if prof is not None:
        ratios = _ratios(prof)
        best = min(r for r, _, _ in ratios)
        c, m = max((c, m) for r, c, m in ratios if r == best)
        return frozenset(bits(m))
    sets = tough_sets(g)
    top = max(len(s) for s in sets)
    return min((s for s in sets if len(s) == top), key=sorted)


def _tripartite(g: Graph, s: int, within: int) -> tuple[int, int, int]:
    u0 = _minimal_cutset_within_mask(g, s, within)
    rest = s & ~u0
    pivot = rest & -rest
    g1 = next(c for c in _component_masks(g.adj, within & ~u0) if c & pivot)
    assert g1 & (g1 - 1), "component meeting S must be nontrivial"
    s1 = s & g1
    assert _n_comps(g, s1, g1) >= 2
    if _is_minimal_cutset_mask(g, s1, g1):
        return u0, s1, g1 & ~s1
    u1, x, y = _tripartite(g, s1, g1)
    return u0 | u1, x, y


def find_tripartite_witness(g: Graph, s) -> TripartiteWitness:
    """Peel minimal cutsets off a non-minimal cutset ``s`` until a complete
    tripartite piece ``(U, X, Y)`` appears, with ``X ∪ Y`` a component of ``G - U``.
    """
    s_mask = mask_of(s)
    if not g.is_connected():
        raise ValueError("graph must be connected")
    comps = _component_masks(g.adj, g.full_mask & ~s_mask)
    if len(comps) < 2:
        raise ValueError("s is not a cutset")
    if _is_minimal_cutset_mask(g, s_mask, g.full_mask):
        raise ValueError("s is a minimal cutset; use the complete bipartite case")
    for u in bits(s_mask):
        if sum(1 for c in comps if g.adj[u] & c) < 2:
            raise ValueError(f"vertex {u} sees fewer than two components of G - S")
        for c in comps:
            seen = g.adj[u] & c
            if seen and seen != c:
                raise ValueError("neighbourhood saturation fails; input is not P4-free")
    u, x, y = _tripartite(g, s_mask, g.full_mask)
    w = TripartiteWitness(frozenset(bits(u)), frozenset(bits(x)), frozenset(bits(y)))
    assert w.verify(g, frozenset(bits(s_mask))), w
    return w


def check_contraction_toughness(g: Graph, s, r) -> tuple[bool, bool]:
    """For a maximal tough-set ``s`` and a component ``r`` of ``g - s``:
    is ``r`` (1/ceil(1/t))-tough, and is the contraction of ``r`` still t-tough?
    """
    t = toughness_exact(g).value
    if t is INF or t > 1 or t == 0:
        raise ValueError("requires a connected graph with toughness at most 1")
    k = math.ceil(1 / t)
    component_tough = is_t_tough(induced_subgraph(g, r), Fraction(1, k))
    contracted_tough = is_t_tough(contract(g, r).graph, t)
    return component_tough, contracted_tough


def lemma_bounds_hold(g: Graph, s, max_subset_size: int = 12) -> bool:
    """Component-adjacency bounds for a tough-set ``s`` of a graph with toughness t <= 1.

    Every nonempty proper subset S' sees at least |S'|/t + 1 components,
    S itself sees at least |S|/t, and each vertex of S sees at least two.
    Subsets are enumerated only when ``|s| <= max_subset_size``.
    """
    s = sorted(s)
    t = toughness_exact(g).value
    if t is INF or t > 1:
        raise ValueError("bounds apply for toughness at most 1")
    if any(adjacency_count(g, s, [v]) < 2 for v in s):
        return False
    if adjacency_count(g, s, s) < len(s) / t:
        return False
    if len(s) > max_subset_size:
        return True
    for size in range(1, len(s)):
        for sub in itertools.combinations(s, size):
            if adjacency_count(g, s, sub) < Fraction(size) / t + 1:
                return False
    return True


@dataclass(frozen=True)
class NotTough:
    """Evidence that a graph falls below a toughness threshold."""

    threshold: Fraction
    result: ToughnessResult

    def to_json(self) -> dict:
        return {
            "not_tough": True,
            "threshold": format_ratio(self.threshold),
            **self.result.to_json(),
        }
