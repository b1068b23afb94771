from .errors import (Graph6Error, EdgeListError, NotRegularError, NotNiceError,
                     WeightDomainError, CertificateError, OracleCapExceeded, GenerationError,
                     SaturationFailure, FallbackExhausted, InvariantViolation)
from .graph import Graph, regularity, parse_edge_list, write_edge_list
from .graph6 import (parse_graph6, encode_graph6, parse_graph6_lines, parse_graph, load_graph,
                     load_graphs, write_graph6, graph_digest)
from .generate import gen_random_regular
from .weightset import WeightSet
from .partition import (LayeredPartition, maximum_independent_set, greedy_independent_set,
                        layered_partition, degeneracy_order, degeneracy_coloring)
from .matching import Matching, saturating_matching
from .state import VertexType, WeightState
from .bipartite import weight_bipartite
from .phases import initial_weighting, resolve_conflicts
from .cycles import weight_cycle
from .verifier import ConflictReport, AuditReport, Stage, verify_proper, audit
from .certificate import Certificate, load_certificate, write_certificate, check_certificate
from .search import SearchMode, brute_force_search, local_search
from .weighter import WeighterConfig, weight_regular, weight_with_set
from .oracle import CrossCheckVerdict, cross_check
from .batch import BatchReport, run_batch, run_corpus

__all__ = ["Graph6Error", "EdgeListError", "NotRegularError", "NotNiceError",
           "WeightDomainError", "CertificateError", "OracleCapExceeded", "GenerationError",
           "SaturationFailure", "FallbackExhausted", "InvariantViolation",
           "Graph", "regularity", "parse_edge_list", "write_edge_list",
           "parse_graph6", "encode_graph6", "parse_graph6_lines", "parse_graph", "load_graph",
           "load_graphs", "write_graph6", "graph_digest",
           "gen_random_regular",
           "WeightSet",
           "LayeredPartition", "maximum_independent_set", "greedy_independent_set",
           "layered_partition", "degeneracy_order", "degeneracy_coloring",
           "Matching", "saturating_matching",
           "VertexType", "WeightState",
           "weight_bipartite", "initial_weighting", "resolve_conflicts", "weight_cycle",
           "ConflictReport", "AuditReport", "Stage", "verify_proper", "audit",
           "Certificate", "load_certificate", "write_certificate", "check_certificate",
           "SearchMode", "brute_force_search", "local_search",
           "WeighterConfig", "weight_regular", "weight_with_set",
           "CrossCheckVerdict", "cross_check",
           "BatchReport", "run_batch", "run_corpus"]
