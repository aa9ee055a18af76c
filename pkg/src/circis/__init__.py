"""Circulant graphs and the CIS property.

A graph is CIS when every maximal clique meets every maximal stable set.
The package builds circulants and k-paired circulants, enumerates maximal
cliques and stable sets, decides CIS, runs exhaustive censuses, and
carries the comb / settledness machinery for general graphs.
"""
from .circulant import (
    Circulant,
    DistanceSet,
    cayley_multiplier,
    circulant_from_half_mask,
    complement_circulant,
    component_count,
    component_subgraph,
    cycle_circulant,
    complete_circulant,
    edgeless_circulant,
    format_circulant,
    is_bipartite,
    is_co_connected_circulant,
    is_connected_circulant,
    lex_product,
    lex_vertex,
    make_circulant,
    parse_circulant,
)
from .cis import (
    AlmostCISReport,
    CISReport,
    almost_cis,
    alpha_omega_bound,
    is_cis,
    is_cis_bruteforce,
    is_cis_circulant,
    is_split_with_unique_partition,
    split_partitions,
)
from .combs import (
    CombEmbedding,
    build_anticomb,
    build_comb,
    build_settled_anticomb,
    build_settled_comb,
    bull_graph,
    chvatal_sufficient,
    cis_extension,
    find_unsettled,
    holzman_graph,
)
from .census import CensusRecord, census, is_p4_free_circulant
from .enumeration import (
    alpha,
    canonical_gap_classes,
    format_gap_class,
    gap_sequence,
    generate,
    is_co_well_covered,
    is_well_covered,
    maximal_cliques,
    maximal_stable_sets,
    omega,
    parse_gap_class,
    size_spectrum,
)
from .errors import *  # noqa: F401,F403
from .graphs import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    from_edge_list,
    from_graph6,
    is_p4_free,
    lex_product_graph,
    path_graph,
    to_edge_list,
    to_graph6,
)
from .paired import (
    PairedSpec,
    blocking_stable_triple,
    clique_size_formulas,
    co_reduce,
    format_spec,
    gn_family,
    is_cis_2paired,
    is_p4_free_paired,
    lcm_reduce,
    paired_is_co_connected,
    paired_is_connected,
    paired_lex_product,
    parse_spec,
    realize,
    recognize_paired,
    reduce_connected,
    spec,
)
from .verify import fixtures, verify

__version__ = "0.1.0"
