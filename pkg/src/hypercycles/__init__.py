"""Berge cycle decompositions of complete uniform hypergraphs."""

from .bipartite import (BipartiteGraph, HallCertificate, Matching, check_chiba, check_jackson,
                        find_cycle_of_length, hall_certificate, max_matching)
from .baranyai import SplitSpec, almost_regular_partition, degree_target
from .cycle_model import BergeCycle, CircleWitness, Classification, classify, find_berge_cycle, find_circle
from .decompose import (Decomposition, LengthSpec, Part, case_of, check_thm5_condition, choose_leave,
                        decompose_almost_regular, decompose_corank, decompose_fixed_length,
                        translate_matching)
from .errors import (BudgetExhausted, ConstructionError, Infeasible, MatchingDeficient, TooLarge,
                     Unsupported)
from .graph_cycles import AlphaBeta, Multigraph, alpha_beta, build_H, decompose_2kn, exhaustive_cycle_cover
from .hypergraph import HEdge, Hypergraph, complete_uniform, degree_profile, remove_edges
from .shadows import (SetFamily, gen_binomial, kk_bound_i, kk_bound_ii, kk_bound_iii, kk_bound_plus,
                      lower_shadow, pq_decompose, solve_s, upper_shadow)
from .verify import DecompositionReport, verify_decomposition

__version__ = "0.1.0"
