"""Acceptance criteria 1-8.

Each test prints one ``criterion N PASS|FAIL: ...`` line; the lines are
also collected and repeated in the terminal summary.  Run alone with
``pytest tests/test_acceptance.py -v``.
"""

import functools
import time
from collections import Counter
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import pytest
from networkx.generators.atlas import graph_atlas_g

from cotough import sbep as sbep_mod
from cotough.cograph import enumerate_cographs, require_cotree
from cotough.graph import components, lex_product_k, parse_graph
from cotough.hamilton import cograph_ham_cycle
from cotough.oracle import oracle_hamiltonian, oracle_k_walk, oracle_prism_hamiltonian, oracle_toughness
from cotough.prism_walks import (
    KWalk,
    find_k_walk,
    prism_cycle_from_sbep,
    two_walk_from_prism_cycle,
    validate_k_walk,
    validate_prism_cycle,
)
from cotough.sbep import InvariantError, SbepGraph, single_block_vertices, spanning_sbep, validate_sbep
from cotough.sweep import check_lemmas, random_cographs
from cotough.toughness import (
    INF,
    at_least,
    is_t_tough,
    maximal_tough_set,
    toughness_exact,
)

from conftest import ACCEPTANCE_LINES, from_nx, km_plus_nk1, remark_family

HALF = Fraction(1, 2)
FIXTURES = Path(__file__).parent / "fixtures"
RANDOM_COUNT = 10_000
RANDOM_SEED = 20240601
RANDOM_BUDGET_SECONDS = 600
# connected cographs on n = 2..9 vertices (series-parallel network counts)
CONNECTED_COGRAPH_COUNTS = [1, 2, 5, 12, 33, 90, 261, 766]


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def connected_cographs(nmin: int, nmax: int):
    for n in range(nmin, nmax + 1):
        yield from enumerate_cographs(n, connected=True)


# -- independent watchers on the two SBEP building steps ---------------------


class Watch:
    def __init__(self):
        self.calls = Counter()
        self.violations: list[str] = []


@contextmanager
def watched_sbep(watch: Watch):
    """Re-check single-block and block-count properties on every call the
    induction makes, without trusting the constructors' own assertions."""
    real_combine, real_bipartite = sbep_mod.combine, sbep_mod.bipartite_sbep

    def counts(s):
        return Counter(v for b in s.blocks for v in b.vertices)

    def combine(s1, s2, e1, e2):
        out = real_combine(s1, s2, e1, e2)
        watch.calls["combine"] += 1
        if counts(out) != counts(s1) + counts(s2) or not validate_sbep(out):
            watch.violations.append(f"combine {e1} {e2}")
        return out

    def bipartite(g, x, y):
        out = real_bipartite(g, x, y)
        watch.calls["bipartite"] += 1
        y = set(y)
        if not validate_sbep(out) or out.vertices != set(x) | y or not y <= single_block_vertices(out):
            watch.violations.append(f"bipartite {sorted(x)} {sorted(y)}")
        return out

    sbep_mod.combine, sbep_mod.bipartite_sbep = combine, bipartite
    try:
        yield watch
    finally:
        sbep_mod.combine, sbep_mod.bipartite_sbep = real_combine, real_bipartite


def lemma_check(g, failures: list, counter: Counter) -> None:
    try:
        rec = check_lemmas(g)
    except (InvariantError, ValueError) as exc:
        failures.append(f"{g!r}: {exc}")
        return
    counter["checked" if not rec.get("skipped") else "skipped"] += 1
    if not rec["ok"]:
        failures.append(repr(g))


# -- shared sweeps (criteria 1, 7 and 8 reuse them) ----------------------------


@functools.cache
def exhaustive_prism_sweep():
    watch = Watch()
    stats = Counter()
    bad: list[str] = []
    lemma_failures: list[str] = []
    lemma_counts: Counter = Counter()
    with watched_sbep(watch):
        for g in connected_cographs(2, 9):
            tau = toughness_exact(g).value
            tough = at_least(tau, HALF)
            try:
                res = spanning_sbep(g)
            except InvariantError as exc:
                bad.append(f"InvariantError {g!r}: {exc}")
                continue
            built = isinstance(res, SbepGraph) and validate_sbep(res) and res.is_spanning()
            cycle_ok = False
            if built:
                cyc = prism_cycle_from_sbep(res)
                cycle_ok = validate_prism_cycle(g, cyc, vertical_at=single_block_vertices(res))
                cycle_ok = cycle_ok and validate_k_walk(g, two_walk_from_prism_cycle(cyc))
            oracle = oracle_prism_hamiltonian(g).holds
            stats["graphs"] += 1
            stats["prism_hamiltonian"] += oracle
            if not (built == cycle_ok == oracle == tough):
                bad.append(repr(g))
            lemma_check(g, lemma_failures, lemma_counts)
    return stats, bad, watch, lemma_failures, lemma_counts


@functools.cache
def random_certificate_sweep():
    watch = Watch()
    stats = Counter()
    bad: list[str] = []
    lemma_failures: list[str] = []
    lemma_counts: Counter = Counter()
    start = time.perf_counter()
    with watched_sbep(watch):
        for g in random_cographs(RANDOM_COUNT, 10, 20, RANDOM_SEED):
            stats["graphs"] += 1
            try:
                res = toughness_exact(g)
                tau = res.value
                if res.witness is not None:
                    c = len(components(g, set(g.vertices) - res.witness))
                    if c < 2 or Fraction(len(res.witness), c) != tau:
                        bad.append(f"tough-set {g!r}")
                sb = spanning_sbep(g)
                if at_least(tau, HALF):
                    stats["half_tough"] += 1
                    if not isinstance(sb, SbepGraph):
                        bad.append(f"NotTough despite tau={tau} {g!r}")
                        continue
                    if not (validate_sbep(sb) and sb.is_spanning()):
                        bad.append(f"sbep {g!r}")
                    cyc = prism_cycle_from_sbep(sb)
                    if not validate_prism_cycle(g, cyc, vertical_at=single_block_vertices(sb)):
                        bad.append(f"prism {g!r}")
                    if not validate_k_walk(g, two_walk_from_prism_cycle(cyc)):
                        bad.append(f"2-walk {g!r}")
                elif isinstance(sb, SbepGraph):
                    bad.append(f"SBEP below 1/2 {g!r}")
                for k in (1, 2, 3):
                    w = find_k_walk(g, k)
                    if isinstance(w, KWalk) != at_least(tau, Fraction(1, k)):
                        bad.append(f"{k}-walk decision {g!r}")
                    elif isinstance(w, KWalk):
                        stats[f"walk{k}"] += 1
                        if not validate_k_walk(g, w):
                            bad.append(f"{k}-walk {g!r}")
                cyc = cograph_ham_cycle(g, require_cotree(g))
                if cyc is not None:
                    if sorted(cyc) != list(g.vertices) or not all(
                        g.has_edge(cyc[i - 1], cyc[i]) for i in range(g.n)
                    ):
                        bad.append(f"ham {g!r}")
            except InvariantError as exc:
                bad.append(f"InvariantError {g!r}: {exc}")
                continue
            lemma_check(g, lemma_failures, lemma_counts)
    elapsed = time.perf_counter() - start
    return stats, bad, watch, lemma_failures, lemma_counts, elapsed


# -- criteria ------------------------------------------------------------------


def test_criterion_1_prism_equivalence():
    stats, bad, _, _, _ = exhaustive_prism_sweep()
    ok = not bad and stats["graphs"] == sum(CONNECTED_COGRAPH_COUNTS)
    report(1, ok, f"{stats['graphs']} connected cographs n=2..9, "
           f"{stats['prism_hamiltonian']} prism-hamiltonian, {len(bad)} disagreements "
           "(SBEP <=> prism cycle <=> oracle <=> tau >= 1/2)")
    assert ok, bad[:5]


def test_criterion_2_k_walk_equivalence():
    bad = []
    checked = 0
    for g in connected_cographs(1, 6):
        tau = toughness_exact(g).value
        for k in (1, 2, 3):
            res = find_k_walk(g, k)
            built = isinstance(res, KWalk) and validate_k_walk(g, res)
            oracle = oracle_k_walk(g, k).holds
            checked += 1
            if not (built == at_least(tau, Fraction(1, k)) == oracle):
                bad.append((repr(g), k))
    report(2, not bad, f"{checked} (graph, k) pairs, connected cographs n<=6, k=1..3, {len(bad)} disagreements")
    assert not bad, bad[:5]


def test_criterion_3_hamiltonicity():
    bad = []
    checked = hamiltonian = 0
    for g in connected_cographs(3, 9):
        cyc = cograph_ham_cycle(g, require_cotree(g))
        verdict = oracle_hamiltonian(g, "cycle")
        tough = at_least(toughness_exact(g).value, 1)
        valid = cyc is not None and sorted(cyc) == list(g.vertices) and all(
            g.has_edge(cyc[i - 1], cyc[i]) for i in range(g.n)
        )
        checked += 1
        hamiltonian += verdict.holds
        if not ((cyc is not None) == valid == tough == verdict.holds):
            bad.append(repr(g))
    report(3, not bad, f"{checked} connected cographs n=3..9, {hamiltonian} hamiltonian, {len(bad)} disagreements")
    assert not bad, bad[:5]


def test_criterion_4_lex_product_identity():
    bad = []
    checked = oracle_checked = 0
    for n in range(1, 7):
        for g in enumerate_cographs(n):
            tau = toughness_exact(g).value
            for k in (1, 2, 3):
                blown = lex_product_k(g, k)
                got = toughness_exact(blown).value
                want = INF if tau is INF else k * tau
                checked += 1
                if got != want:
                    bad.append((repr(g), k))
                if blown.n <= 10:
                    value, _ = oracle_toughness(blown)
                    oracle_checked += 1
                    if (INF if value is None else value) != want:
                        bad.append((repr(g), k, "oracle"))
    report(4, not bad, f"{checked} (cograph, k) pairs n<=6, k<=3 ({oracle_checked} also by oracle), "
           f"{len(bad)} mismatches of tau(G[K_k]) = k tau(G)")
    assert not bad, bad[:5]


def test_criterion_5_example_families():
    bad = []
    for m in range(1, 5):
        for n in range(2, 9):
            if toughness_exact(km_plus_nk1(m, n)).value != Fraction(m, n):
                bad.append(f"K_{m}+{n}K1")
    for p in (2, 3, 4):
        g = remark_family(p)
        t = Fraction(p, 2 * p - 1)
        if toughness_exact(g).value != t:
            bad.append(f"remark p={p} toughness")
        if maximal_tough_set(g) != frozenset(range(p)):
            bad.append(f"remark p={p} maximal tough-set")
        r = [p, p + 1, p + 2]
        if r not in [sorted(c) for c in components(g, set(g.vertices) - set(range(p)))]:
            bad.append(f"remark p={p} component")
        sub = parse_graph("3\n0 1\n0 2", "edge_list")
        if is_t_tough(sub, t) or not is_t_tough(sub, HALF):
            bad.append(f"remark p={p} K_1,2 toughness")
    report(5, not bad, "tau(K_m + nK1) = m/n for m<=4, n=2..8; remark family p=2,3,4 "
           f"(tau, maximal tough-set, K_1,2 only 1/2-tough); {len(bad)} failures")
    assert not bad, bad


def test_criterion_6_implication_chain():
    exceptions = []
    checked = 0
    for G in graph_atlas_g()[1:]:
        g = from_nx(G)
        if g.n < 2:
            continue  # prism of K1 is K2, which has no cycle
        checked += 1
        path_ = oracle_hamiltonian(g, "path").holds
        prism_ = oracle_prism_hamiltonian(g).holds
        walk_ = oracle_k_walk(g, 2).holds
        if (path_ and not prism_) or (prism_ and not walk_):
            exceptions.append(repr(g))

    def load(name):
        text = (FIXTURES / name).read_text()
        return [parse_graph(line) for line in text.splitlines() if line.strip()]

    prism_no_path = load("prism_hamiltonian_no_ham_path.g6")
    walk_no_prism = load("two_walk_not_prism_hamiltonian.g6")
    fixtures_ok = bool(prism_no_path) and bool(walk_no_prism)
    for g in prism_no_path:
        fixtures_ok &= oracle_prism_hamiltonian(g).holds and not oracle_hamiltonian(g, "path").holds
    for g in walk_no_prism:
        fixtures_ok &= oracle_k_walk(g, 2).holds and not oracle_prism_hamiltonian(g).holds
    ok = not exceptions and fixtures_ok
    report(6, ok, f"{checked} atlas graphs n=2..7, {len(exceptions)} chain exceptions; fixtures: "
           f"{len(prism_no_path)} prism-ham without ham path, {len(walk_no_prism)} 2-walk without prism-ham")
    assert ok, exceptions[:5]


@pytest.mark.slow
def test_criterion_7_random_certificates():
    stats, bad, _, _, _, elapsed = random_certificate_sweep()
    ok = not bad and stats["graphs"] == RANDOM_COUNT and elapsed < RANDOM_BUDGET_SECONDS
    report(7, ok, f"{stats['graphs']} random cographs n=10..20 (seed {RANDOM_SEED}), "
           f"{stats['half_tough']} at least 1/2-tough, {len(bad)} certificate failures, {elapsed:.0f}s")
    assert ok, bad[:5]


@pytest.mark.slow
def test_criterion_8_lemma_invariants():
    _, bad1, watch1, lem1, counts1 = exhaustive_prism_sweep()
    _, bad7, watch7, lem7, counts7, _ = random_certificate_sweep()
    invariant_errors = [b for b in bad1 + bad7 if b.startswith("InvariantError")]
    violations = watch1.violations + watch7.violations
    calls = watch1.calls + watch7.calls
    checked = counts1["checked"] + counts7["checked"]
    ok = not (lem1 or lem7 or violations or invariant_errors) and calls["combine"] and calls["bipartite"]
    report(8, ok, f"tough-set bounds, saturation and contraction checked on {checked} graphs; "
           f"{calls['bipartite']} bipartite steps, {calls['combine']} combine steps re-checked; "
           f"{len(lem1) + len(lem7) + len(violations) + len(invariant_errors)} violations")
    assert ok, (lem1 + lem7 + violations + invariant_errors)[:5]
