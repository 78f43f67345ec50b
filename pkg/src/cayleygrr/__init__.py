"""Cayley graphs on (2, p)-generated groups with exact certification of
graphical regular representations.

The package builds Cayley graphs whose connection set is an inverse-closed
window of powers of a prime-order element together with one or two
involutions, decides whether the graph's full automorphism group is exactly
the regular copy of the group (a graphical regular representation), and
cross-checks every certificate with independent computation: a full graph
automorphism search, brute-force oracles at small sizes, and Monte Carlo
generation sampling.
"""

from .autgraph import (
    AutGroup,
    Coloring,
    NodeBudgetExceeded,
    automorphism_group,
    block_action,
    brute_force_automorphisms,
    is_partition_invariant,
    normalizer_order_of_regular_subgroup,
    refine_equitable,
    vertex_stabilizer_order,
)
from .cayley import (
    ConnectionSet,
    Graph,
    VertexLimitExceeded,
    cayley_graph,
    circulant_graph,
    coset_partition,
    edges_between_blocks,
    from_dimacs,
    from_graph6,
    is_connected,
    quotient_graph,
    standard_connection_set,
    to_dimacs,
    to_graph6,
    validate_connection_set,
)
from .grouptab import (
    ElementAutomorphism,
    EnumerationCapExceeded,
    GroupTable,
    conjugacy_classes,
    count_involutions,
    cyclic_membership,
    enumerate_group,
    extend_generator_map,
    has_subgroup_of_index_lt4,
)
from .grrcert import (
    AnConstruction,
    alternating_connection_stabilizer,
    certify_alternating,
    certify_grr,
    connection_set_stabilizer,
    construct_an,
    cyclic_connection_stabilizer_order,
    fixed_point_sets,
    inverting_involution_witness,
    min_prime_for_valency,
    prime_window,
    verify_grr_exhaustive,
)
from .perm import (
    StabilizerChain,
    build_chain,
    compose,
    contains,
    format_cycles,
    identity,
    inverse,
    order_of,
    parse_cycles,
    power,
)
from .sampler import (
    GenerationEstimate,
    SamplerConfig,
    element_of_order,
    estimate_generation_probability,
    load_generators,
    primitive_prime_divisors,
    random_element,
    random_involution,
)

__version__ = "0.1.0"

__all__ = [
    "AnConstruction",
    "AutGroup",
    "Coloring",
    "ConnectionSet",
    "ElementAutomorphism",
    "EnumerationCapExceeded",
    "GenerationEstimate",
    "Graph",
    "GroupTable",
    "NodeBudgetExceeded",
    "SamplerConfig",
    "StabilizerChain",
    "VertexLimitExceeded",
    "alternating_connection_stabilizer",
    "automorphism_group",
    "block_action",
    "brute_force_automorphisms",
    "build_chain",
    "cayley_graph",
    "certify_alternating",
    "certify_grr",
    "circulant_graph",
    "compose",
    "conjugacy_classes",
    "connection_set_stabilizer",
    "construct_an",
    "contains",
    "coset_partition",
    "count_involutions",
    "cyclic_connection_stabilizer_order",
    "cyclic_membership",
    "edges_between_blocks",
    "element_of_order",
    "enumerate_group",
    "estimate_generation_probability",
    "extend_generator_map",
    "fixed_point_sets",
    "format_cycles",
    "from_dimacs",
    "from_graph6",
    "has_subgroup_of_index_lt4",
    "identity",
    "inverse",
    "inverting_involution_witness",
    "is_connected",
    "is_partition_invariant",
    "load_generators",
    "min_prime_for_valency",
    "normalizer_order_of_regular_subgroup",
    "order_of",
    "parse_cycles",
    "power",
    "prime_window",
    "primitive_prime_divisors",
    "quotient_graph",
    "random_element",
    "random_involution",
    "refine_equitable",
    "standard_connection_set",
    "to_dimacs",
    "to_graph6",
    "validate_connection_set",
    "verify_grr_exhaustive",
    "vertex_stabilizer_order",
]
