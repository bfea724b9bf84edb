"""Hamiltonian colorings of trees: a level-based lower bound, optimal
colorings from qualified vertex orders, four tree families with closed
forms, and an exact brute-force oracle for small trees."""

from .coloring import (Coloring, HCResult, HypothesisViolated, MissingVertexColor,
                       NegativeIncrement, NoQualifiedOrder, NotAPermutation,
                       OrderConditionReport, VerifyReport, check_order,
                       coloring_from_order, find_qualified_order, greedy_coloring,
                       hc_via_conditions, lower_bound, verify)
from .families import (BadParams, FamilyInstance, FamilySpec, OrderFallbackWarning,
                       closed_forms, gen_caterpillar, gen_firecracker,
                       gen_path_plus_pendant, gen_symmetric, generate, grid, hc_caterpillar,
                       hc_firecracker, hc_path_plus_pendant, hc_symmetric)
from .oracle import (Inexhaustive, OracleBudget, OracleResult, brute_force_D,
                     brute_force_hc, canonical_form, enumerate_trees, random_tree)
from .tree import (BadVertexId, BranchId, CenterInfo, CycleDetected, DisconnectedGraph,
                   LevelTable, Tree, branch_of, center, delta, diameter, distance,
                   distance_via_levels, is_db_half, levels, path_tree, phi, star_tree,
                   validate_tree)

__version__ = "0.1.0"
