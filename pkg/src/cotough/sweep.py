"""Batch cross-checks of the constructive modules against the oracles.

Each ``check_*`` function returns a JSON-ready record with an ``ok`` flag.
A record is not ok when a certificate fails its validator, when the
constructive answer disagrees with the toughness threshold, or when it
disagrees with an oracle that was run.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction
from typing import Iterable, Iterator

from .cograph import enumerate_cographs, neighbor_saturation_check, random_cograph, require_cotree
from .graph import Graph, components, emit_graph, lex_product_k
from .hamilton import cograph_ham_cycle
from .oracle import oracle_hamiltonian, oracle_k_walk, oracle_prism_hamiltonian, oracle_toughness
from .prism_walks import (
    KWalk,
    find_k_walk,
    prism_cycle_from_sbep,
    two_walk_from_prism_cycle,
    validate_k_walk,
    validate_prism_cycle,
)
from .sbep import SbepGraph, single_block_vertices, spanning_sbep, validate_sbep
from .toughness import (
    INF,
    at_least,
    check_contraction_toughness,
    format_ratio,
    lemma_bounds_hold,
    maximal_tough_set,
    toughness_exact,
)

__all__ = [
    "KINDS",
    "digest",
    "check_toughness",
    "check_prism",
    "check_k_walk",
    "check_ham",
    "check_lex",
    "check_lemmas",
    "run_checks",
    "exhaustive_cographs",
    "random_cographs",
    "sweep",
]

HALF = Fraction(1, 2)
KINDS = ("toughness", "prism", "kwalk", "ham", "lex", "lemmas")

ORACLE_TOUGHNESS_MAX = 10
ORACLE_PRISM_MAX = 9
ORACLE_HAM_MAX = 18


def digest(g: Graph) -> str:
    return hashlib.sha256(emit_graph(g).encode()).hexdigest()[:16]


def check_toughness(g: Graph, oracle: bool = True) -> dict:
    res = toughness_exact(g)
    ok = True
    if res.witness is not None:
        left = frozenset(g.vertices) - res.witness
        c = len(components(g, left))
        ok = c >= 2 and Fraction(len(res.witness), c) == res.value
    rec = {"kind": "toughness", **res.to_json()}
    if oracle and g.n <= ORACLE_TOUGHNESS_MAX:
        value, _ = oracle_toughness(g)
        expected = INF if value is None else value
        rec["oracle"] = format_ratio(expected)
        ok = ok and expected == res.value
    rec["ok"] = ok
    return rec


def check_prism(g: Graph, oracle: bool = True) -> dict:
    tau = toughness_exact(g).value
    res = spanning_sbep(g)
    holds = isinstance(res, SbepGraph)
    ok = holds == at_least(tau, HALF)
    rec: dict = {"kind": "prism", "toughness": format_ratio(tau), "holds": holds}
    if holds:
        cyc = prism_cycle_from_sbep(res)
        walk = two_walk_from_prism_cycle(cyc)
        ok = ok and validate_sbep(res) and res.is_spanning()
        ok = ok and validate_prism_cycle(g, cyc, vertical_at=single_block_vertices(res))
        ok = ok and validate_k_walk(g, walk)
        rec["blocks"] = len(res.blocks)
    else:
        ok = ok and res.result.value == tau
    if oracle and g.n <= ORACLE_PRISM_MAX:
        verdict = oracle_prism_hamiltonian(g)
        rec["oracle"] = verdict.holds
        ok = ok and verdict.holds == holds
    rec["ok"] = ok
    return rec


def check_k_walk(g: Graph, k: int, oracle: bool = True) -> dict:
    tau = toughness_exact(g).value
    res = find_k_walk(g, k)
    holds = isinstance(res, KWalk)
    ok = holds == at_least(tau, Fraction(1, k))
    if holds:
        ok = ok and validate_k_walk(g, res)
    rec: dict = {"kind": "kwalk", "k": k, "toughness": format_ratio(tau), "holds": holds}
    if oracle and g.n * k <= ORACLE_HAM_MAX:
        verdict = oracle_k_walk(g, k)
        rec["oracle"] = verdict.holds
        ok = ok and verdict.holds == holds
    rec["ok"] = ok
    return rec


def check_ham(g: Graph, oracle: bool = True) -> dict:
    tau = toughness_exact(g).value
    cyc = cograph_ham_cycle(g, require_cotree(g))
    holds = cyc is not None
    ok = holds == at_least(tau, 1)
    rec: dict = {"kind": "ham", "toughness": format_ratio(tau), "holds": holds}
    if holds:
        ok = ok and sorted(cyc) == list(g.vertices)
        ok = ok and all(g.has_edge(cyc[i - 1], cyc[i]) for i in range(len(cyc)))
    if oracle and g.n <= ORACLE_HAM_MAX:
        verdict = oracle_hamiltonian(g, "cycle")
        rec["oracle"] = verdict.holds
        ok = ok and verdict.holds == holds
    rec["ok"] = ok
    return rec


def check_lex(g: Graph, ks: Iterable[int] = (1, 2, 3)) -> dict:
    """toughness(g[K_k]) == k * toughness(g) for each k."""
    tau = toughness_exact(g).value
    ok = True
    seen = {}
    for k in ks:
        blown = toughness_exact(lex_product_k(g, k)).value
        expected = INF if tau is INF else k * tau
        seen[str(k)] = format_ratio(blown)
        ok = ok and blown == expected
    return {"kind": "lex", "toughness": format_ratio(tau), "blown": seen, "ok": ok}


def check_lemmas(g: Graph) -> dict:
    """Structural facts about a maximal tough-set when toughness <= 1."""
    tau = toughness_exact(g).value
    rec: dict = {"kind": "lemmas", "toughness": format_ratio(tau)}
    if tau is INF or tau > 1 or tau == 0:
        rec["ok"] = True
        rec["skipped"] = True
        return rec
    s = maximal_tough_set(g)
    ok = lemma_bounds_hold(g, s) and neighbor_saturation_check(g, s)
    for comp in components(g, frozenset(g.vertices) - s):
        ok = ok and all(check_contraction_toughness(g, s, comp))
    rec["tough_set"] = sorted(s)
    rec["ok"] = ok
    return rec


def run_checks(g: Graph, kinds: Iterable[str], oracle: bool = True) -> list[dict]:
    out = []
    connected = g.is_connected()
    for kind in kinds:
        if kind == "toughness":
            out.append(check_toughness(g, oracle))
        elif kind == "prism" and connected and g.n >= 2:
            out.append(check_prism(g, oracle))
        elif kind == "kwalk" and connected:
            out += [check_k_walk(g, k, oracle) for k in (1, 2, 3)]
        elif kind == "ham" and connected and g.n >= 3:
            out.append(check_ham(g, oracle))
        elif kind == "lex":
            out.append(check_lex(g))
        elif kind == "lemmas" and connected and g.n >= 2:
            out.append(check_lemmas(g))
        elif kind not in KINDS:
            raise ValueError(f"unknown check kind {kind!r}")
    return out


def exhaustive_cographs(nmin: int, nmax: int, connected: bool | None = True) -> Iterator[Graph]:
    for n in range(nmin, nmax + 1):
        yield from enumerate_cographs(n, connected)


def random_cographs(
    count: int, nmin: int, nmax: int, seed: int, p_join: float | None = None
) -> Iterator[Graph]:
    """Seeded random connected cographs.

    Without ``p_join`` each graph draws its own join bias from [0.25, 0.6],
    which keeps a healthy share of graphs with toughness between 1/2 and 1.
    """
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(nmin, nmax)
        p = rng.uniform(0.25, 0.6) if p_join is None else p_join
        yield random_cograph(n, rng, p_join=p, connected=True)


def sweep(
    nmax: int,
    kinds: Iterable[str] = ("toughness", "prism", "kwalk", "ham"),
    seed: int = 0,
    random_count: int = 0,
    random_nmax: int = 20,
    oracle: bool = True,
) -> Iterator[dict]:
    """Yield one record per graph: exhaustive connected cographs on 2..nmax
    vertices, then ``random_count`` seeded random connected cographs on
    nmax+1..random_nmax vertices.
    """
    kinds = tuple(kinds)
    graphs = list(exhaustive_cographs(2, nmax))
    if random_count:
        graphs += list(random_cographs(random_count, nmax + 1, max(random_nmax, nmax + 1), seed))
    for i, g in enumerate(graphs):
        checks = run_checks(g, kinds, oracle)
        yield {
            "index": i,
            "input": digest(g),
            "graph6": emit_graph(g),
            "n": g.n,
            "checks": checks,
            "ok": all(c["ok"] for c in checks),
        }
