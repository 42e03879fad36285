from fractions import Fraction
from itertools import permutations

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from cotough.graph import complete, complete_bipartite, cycle, empty, path
from cotough.oracle import (
    SizeGuardError,
    oracle_hamiltonian,
    oracle_k_walk,
    oracle_prism_hamiltonian,
    oracle_toughness,
)
from cotough.prism_walks import KWalk, PrismCycle, validate_k_walk, validate_prism_cycle

from conftest import from_nx, to_nx

ATLAS = [from_nx(G) for G in graph_atlas_g()[1:]]


def nx_has_ham_cycle(G) -> bool:
    """Plain permutation search, fixing vertex 0 and one direction."""
    n = G.number_of_nodes()
    if n < 3:
        return False
    for perm in permutations(range(1, n)):
        seq = (0, *perm)
        if perm[0] < perm[-1] and all(G.has_edge(seq[i - 1], seq[i]) for i in range(n)):
            return True
    return False


class TestHamiltonian:
    def test_examples(self):
        assert oracle_hamiltonian(cycle(5), "cycle").holds
        assert not oracle_hamiltonian(complete_bipartite(1, 3), "cycle").holds
        v = oracle_hamiltonian(path(4), "path")
        assert v.holds and v.property == "hamiltonian_path"

    def test_witnesses(self):
        for g in ATLAS:
            v = oracle_hamiltonian(g, "cycle")
            if v.holds:
                assert sorted(v.witness) == list(g.vertices)
                assert all(g.has_edge(v.witness[i - 1], v.witness[i]) for i in range(g.n))
            p = oracle_hamiltonian(g, "path")
            if p.holds:
                w = p.witness
                assert sorted(w) == list(g.vertices)
                assert all(g.has_edge(a, b) for a, b in zip(w, w[1:]))

    def test_matches_permutation_search(self):
        for g in ATLAS:
            if g.n <= 7:
                assert oracle_hamiltonian(g, "cycle").holds == nx_has_ham_cycle(to_nx(g))

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            oracle_hamiltonian(complete(19))
        with pytest.raises(ValueError):
            oracle_hamiltonian(complete(3), "walk")

    def test_trivial(self):
        assert oracle_hamiltonian(complete(1), "path").holds
        assert not oracle_hamiltonian(empty(0), "path").holds
        assert not oracle_hamiltonian(complete(2), "cycle").holds


class TestPrism:
    def test_examples(self):
        assert not oracle_prism_hamiltonian(complete(1)).holds
        assert oracle_prism_hamiltonian(complete(2)).holds
        assert not oracle_prism_hamiltonian(complete_bipartite(1, 4)).holds

    def test_witness_validates(self):
        for g in ATLAS:
            if g.n > 6:
                continue
            v = oracle_prism_hamiltonian(g)
            if v.holds:
                assert validate_prism_cycle(g, PrismCycle(tuple(map(tuple, v.witness))))

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            oracle_prism_hamiltonian(complete(10))


class TestKWalk:
    def test_examples(self):
        assert oracle_k_walk(path(3), 2).holds
        assert not oracle_k_walk(complete_bipartite(1, 3), 2).holds
        assert oracle_k_walk(cycle(6), 1).holds

    def test_witness_validates(self):
        for g in ATLAS:
            if g.n > 6 or not nx.is_connected(to_nx(g)):
                continue
            for k in (1, 2, 3):
                v = oracle_k_walk(g, k)
                if v.holds:
                    assert validate_k_walk(g, KWalk(k, tuple(v.witness)))

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            oracle_k_walk(complete(7), 3)
        with pytest.raises(ValueError):
            oracle_k_walk(complete(3), 0)


class TestToughness:
    def test_examples(self):
        assert oracle_toughness(path(3)) == (Fraction(1, 2), frozenset({1}))
        assert oracle_toughness(cycle(4))[0] == 1
        assert oracle_toughness(complete(5)) == (None, None)

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            oracle_toughness(complete(11))
