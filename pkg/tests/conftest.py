from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from cotough.graph import Graph, complete, complete_bipartite, disjoint_union, empty, join

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# Lines printed by the acceptance suite, echoed at the end of the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def from_nx(G) -> Graph:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return Graph.from_edges(G.number_of_nodes(), G.edges())


def to_nx(g: Graph):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges())
    return G


def km_plus_nk1(m: int, n: int) -> Graph:
    """K_m joined to n isolated vertices; the clique gets ids 0..m-1."""
    return join(complete(m), empty(n))


def remark_family(p: int) -> Graph:
    """((2p-2)K1 u K_{1,2}) + K_p with K_p on ids 0..p-1 and the K_{1,2}
    centre at p, leaves p+1, p+2."""
    return join(complete(p), disjoint_union(complete_bipartite(1, 2), empty(2 * p - 2)))


def frac(s: str) -> Fraction:
    return Fraction(s)


@pytest.fixture
def p3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])
