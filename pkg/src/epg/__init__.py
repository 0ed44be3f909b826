"""Exact computation with finite groups and their enhanced power graphs:
Cayley-table constructions, graph building, hereditary graph-class
recognition with certificates and witnesses, and a verification suite.
"""

from .errors import (ActionError, EpgError, MembershipError, NormalityError,
                     SizeLimitError, SpecError)
from .graphclass import (ClassVerdict, Witness, find_induced,
                         find_induced_cycle_at_least, is_chordal, is_cograph,
                         is_split, is_threshold, verify_witness)
from .graphs import (SimpleGraph, build_epg, closed_twin_partition, epg_adjacent,
                     maximal_cliques, oracle_graph, to_dot)
from .groups import (FiniteGroup, closure, cyclic, dihedral, direct_product,
                     element_orders_set, elementary_abelian, generalized_quaternion,
                     is_cyclic, quotient, semidirect_product, subgroup_closure,
                     symmetric, alternating, sl2)
from .perms import MatrixModP, Permutation, parse_cycles
from .structure import (cyclicizer, is_cp_group, is_nilpotent,
                        is_p_group_all_prime_orders, maximal_cyclic_subgroups,
                        noncyclic_sylow_count, p_torsion, prime_graph,
                        recognize_family, two_prime_condition,
                        uniform_mcs_intersection)

__version__ = "0.1.0"

__all__ = [
    "ActionError", "ClassVerdict", "EpgError", "FiniteGroup", "MatrixModP",
    "MembershipError", "NormalityError", "Permutation", "SimpleGraph",
    "SizeLimitError", "SpecError", "Witness", "alternating", "build_epg",
    "closed_twin_partition", "closure", "cyclic", "cyclicizer", "dihedral",
    "direct_product", "element_orders_set", "elementary_abelian", "epg_adjacent",
    "find_induced", "find_induced_cycle_at_least", "generalized_quaternion",
    "is_chordal", "is_cograph", "is_cp_group", "is_cyclic", "is_nilpotent",
    "is_p_group_all_prime_orders", "is_split", "is_threshold", "maximal_cliques",
    "maximal_cyclic_subgroups", "noncyclic_sylow_count", "oracle_graph",
    "p_torsion", "parse_cycles", "prime_graph", "quotient", "recognize_family",
    "semidirect_product", "sl2", "subgroup_closure", "symmetric", "to_dot",
    "two_prime_condition", "uniform_mcs_intersection", "verify_witness",
]
