"""Constructive graph-minor and coloring toolkit at desk scale.

Exact small-graph oracles, flow-based connectivity certificates, the
contraction/peeling extraction pipeline, linkage and minor-model machinery,
and a CLI harness with verifiable JSON certificates.
"""

from .graph import (Coloring, ContractionMap, DegeneracyResult, Graph, GraphError,
                    build_graph, complement, connected_components, contract,
                    degeneracy_coloring, induced_subgraph, is_bipartite,
                    is_proper_coloring, quantities)
from .graph6 import Graph6Error, decode_graph6, encode_graph6, read_dimacs_col, read_graph6_file
from . import bounds, catalog, certificates, extraction, flow, generators, linkage, oracles, suites

__all__ = [
    "Coloring", "ContractionMap", "DegeneracyResult", "Graph", "GraphError",
    "build_graph", "complement", "connected_components", "contract",
    "degeneracy_coloring", "induced_subgraph", "is_bipartite",
    "is_proper_coloring", "quantities",
    "Graph6Error", "decode_graph6", "encode_graph6", "read_dimacs_col", "read_graph6_file",
    "bounds", "catalog", "certificates", "extraction", "flow", "generators",
    "linkage", "oracles", "suites",
]

__version__ = "0.1.0"
