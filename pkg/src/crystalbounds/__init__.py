"""Weights, reduced crystals and defect bounds for affine Lie algebras of type A."""
from .bounds import (RegionReport, failing_weights, region_points, sharp_N, sharpness_witness,
                     stratum_nonempty, verify_N)
from .crystal_graph import (CrystalGraph, VertexInfo, check_external_criterion, enumerate_graph,
                            i_string, is_external, is_i_external, reduce_weight)
from .e2 import (E2Context, decompose, enumerate_max_e2, invariants_closed, n_prime, s_closed,
                 verify_n_prime)
from .errors import (CapTooLow, DegenerateSimplex, InvalidRank, IterationLimitExceeded,
                     LevelMismatch, NotAMember, SearchLimitExceeded, VertexNotFound)
from .membership import (MaxWeight, dominant_rep, hub_to_lattice, in_P, is_max, lattice_hub,
                         nu_prime_corner, s_of_m)
from .root_system import (HighestWeight, RankData, add_delta, build_rank, defect_of, degree_of,
                          hub_of, level_of, reflect, translate)
