"""Cycle polynomials of permutation groups and reciprocal pairs of graphs."""

__version__ = "0.1.0"

from .errors import OrbicycleError
from .graphs import (
    Graph,
    GraphSpec,
    QuotientGraph,
    automorphism_group,
    build_graph,
    chromatic_polynomial,
    count_proper_colorings_bruteforce,
    is_invariant,
    quotient,
    transposition_counts,
)
from .group_polys import (
    closed_form,
    cycle_index,
    cycle_polynomial,
    fixed_point_polynomial,
    orbit_count_colorings,
    parker_vector,
    verify_identity,
)
from .perm import (
    GroupSpec,
    Permutation,
    PermutationGroup,
    even_subgroup,
    group_from_generators,
    named_group,
    perm_from_cycles,
)
from .poly import (
    CycleIndex,
    IntPoly,
    RatPoly,
    complex_roots,
    compose,
    falling_factorial,
    integer_roots,
    negative_root_run,
    rising_factorial,
    stirling_first_unsigned,
)
from .reciprocity import (
    ReciprocityReport,
    check_join_family,
    check_reciprocal,
    check_star_theorem,
    edge_bound_filter,
    orbital_chromatic_polynomial,
)
from .search import PairCertificate, SearchConfig, enumerate_graphs, enumerate_trees, find_reciprocal_pairs
from .specs import parse_graph, parse_group
from .subgroups import enumerate_subgroups, subgroup_classes
