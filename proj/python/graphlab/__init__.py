"""Random-graph models, graph matching and ensemble significance.

Thin Python veneer over the compiled ``graphlab._core`` module: classical
generators (G(n,M), G(n,p), Watts-Strogatz, Barabasi-Albert), correlated
Bernoulli graph pairs, network statistics, exact and heuristic graph
matching, alignment strength / total correlation, and empirical-ensemble
significance testing.  Every sampling routine takes an explicit
``Seed(master, stream)`` and is bit-reproducible.
"""

from graphlab._core import (  # noqa: F401
    BernoulliMatrix,
    Bijection,
    Characteristic,
    ClusteringCounts,
    Dedup,
    EnsembleSummary,
    Graph,
    Heterogeneity,
    MatchResult,
    PathLengthStats,
    PowerLawFit,
    Seed,
    SignificanceReport,
    StrengthTrial,
    Theorem1Row,
    WsCurvePoint,
    adjacency_matrix,
    alignment_strength,
    build_ensemble,
    char_path_length,
    characteristic_names,
    clustering_counts,
    clustering_global,
    clustering_local,
    degree_histogram,
    degree_sequence,
    disagreements,
    empirical_edge_correlation,
    exact_gmp,
    gen_ba,
    gen_bernoulli_matrix,
    gen_correlated_pair,
    gen_gnm,
    gen_gnp,
    gen_ws,
    heterogeneity,
    incidence_matrix,
    load_edge_list,
    local_search_gmp,
    make_characteristic,
    mean_random_disagreements,
    mismatch_count,
    parse_edge_list,
    parse_json,
    poisson_tv_distance,
    powerlaw_fit,
    save_edge_list,
    significance,
    strength_convergence_experiment,
    tail_probability,
    theorem1_experiment,
    to_edge_list,
    to_json,
    total_correlation,
    ws_curves,
)

__version__ = "0.1.0"
