"""Coset posets of p-subgroups in finite permutation groups.

Builds finite permutation groups, their p-subgroup and Sylow-intersection
families, and the poset of right cosets over those families; computes the
Euler characteristic of the resulting order complex three independent ways
(two Möbius-sum formulas and a direct simplex count), plus components,
integral homology, and the local quantity chi / |G|_p'; and ships a catalog
plus CLI suites that verify the structural laws these quantities satisfy.
"""

from .analysis import AnalysisReport, Caps, analyze
from .catalog import DEFAULT_CATALOG, CatalogEntry
from .chi import (chi_direct, chi_ti_closed_form, chi_via_subgroup_mobius,
                  chi_via_sylow_intersections, component_count_check,
                  congruence_check, min_sylow_intersection_index, p_local_chi)
from .complexes import (SimplicialComplex, euler_char_simplices, order_complex,
                        read_complex, reduced_euler_char, write_complex)
from .cosetposet import (CosetPoset, PSubgroupPoset, SylowIntersectionFamily,
                         coset_poset, coset_poset_over_family, coset_poset_size,
                         p_subgroup_poset, subgroup_poset,
                         sylow_intersection_family)
from .errors import (AmbientMismatch, ConsistencyError, CosetChiError,
                     DivisibilityViolation, EnumerationCapExceeded, NotNormal,
                     NotPTI, ParseError, PClosedNoPairs, PosetCapExceeded,
                     SimplexCapExceeded)
from .group import (Coset, FiniteGroup, SubgroupHandle, all_p_subgroups,
                    all_sylow, alternating, conjugate_subgroup, cyclic,
                    dihedral, direct_product, frobenius21, generate_group,
                    intersection, is_p_closed, is_p_ti, normalizer, p_core,
                    p_part, p_prime_part, quaternion8, quotient_group,
                    right_cosets, subgroup_generate, sylow_subgroup, symmetric)
from .groupio import parse_group_expression, parse_group_file
from .homology import HomologySummary, homology, is_z_acyclic
from .perm import Permutation
from .poset import (MobiusTable, Poset, connected_components, euler_char_mobius,
                    mobius, mobius_from, poset_product)
from .snf import SmithForm, smith_normal_form
from .suites import SuiteResult, run_suite, search_chi_one

__version__ = "0.1.0"
