"""Toughness, spanning SBEP subgraphs, prism hamiltonicity and spanning
k-walks for cographs, with independently checkable certificates."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    GraphFormatError,
    blocks,
    complement,
    components,
    contract,
    emit_graph,
    induced_subgraph,
    join,
    lex_product_k,
    parse_graph,
    prism,
)
from .cograph import Join, Leaf, NotCographError, P4Witness, Union, random_cograph, recognize
from .toughness import (
    INF,
    NotTough,
    ToughnessResult,
    TripartiteWitness,
    find_tripartite_witness,
    is_minimal_cutset,
    is_t_tough,
    maximal_tough_set,
    toughness_exact,
)
from .sbep import Edge, EvenCycle, SbepGraph, combine, spanning_sbep, validate_sbep
from .prism_walks import (
    KWalk,
    PrismCycle,
    cograph_ham_cycle,
    find_k_walk,
    prism_cycle_from_sbep,
    two_walk_from_prism_cycle,
    validate_k_walk,
    validate_prism_cycle,
)
from .oracle import (
    OracleVerdict,
    SizeGuardError,
    oracle_hamiltonian,
    oracle_k_walk,
    oracle_prism_hamiltonian,
    oracle_toughness,
)

__all__ = [
    "__version__",
    # graph
    "Graph", "GraphFormatError", "blocks", "complement", "components", "contract",
    "emit_graph", "induced_subgraph", "join", "lex_product_k", "parse_graph", "prism",
    # cograph
    "Join", "Leaf", "NotCographError", "P4Witness", "Union", "random_cograph", "recognize",
    # toughness
    "INF", "NotTough", "ToughnessResult", "TripartiteWitness", "find_tripartite_witness",
    "is_minimal_cutset", "is_t_tough", "maximal_tough_set", "toughness_exact",
    # sbep
    "Edge", "EvenCycle", "SbepGraph", "combine", "spanning_sbep", "validate_sbep",
    # prism and walks
    "KWalk", "PrismCycle", "cograph_ham_cycle", "find_k_walk", "prism_cycle_from_sbep",
    "two_walk_from_prism_cycle", "validate_k_walk", "validate_prism_cycle",
    # oracles
    "OracleVerdict", "SizeGuardError", "oracle_hamiltonian", "oracle_k_walk",
    "oracle_prism_hamiltonian", "oracle_toughness",
]
