"""Exact degree-irregularity measures, enumeration and verification suites."""

from ._core import (
    CapabilityError,
    Graph,
    InputError,
    NumericError,
    PreconditionError,
    bound_report,
    canonical_code,
    check_conjectures,
    classify,
    complement,
    complete,
    complete_multipartite,
    complete_split,
    cycle,
    degree2_inflate,
    degree_stats,
    describe_graph,
    empty_graph,
    enumerate,
    extremal_search,
    friendship,
    is_connected,
    main_eigenvalues,
    max_deviation_split_k,
    measure_set,
    named,
    named_graphs,
    path,
    run_suite,
    spectral_radius,
    split_k_argmax,
    split_k_rule,
    star,
    subdivide_edges,
    suite_ids,
    two_walk_params,
    universal_census,
    variance_spectral_identity,
    wheel,
)

__version__ = "0.1.0"
