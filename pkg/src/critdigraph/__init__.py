"""Random digraphs in the critical window: sampling, enumeration, bounds.

Deterministic by construction: every randomized routine takes an explicit
seed and addresses a counter-based RNG, so results are reproducible across
processes, job counts, and backends.
"""

from ._kernels import BACKEND
from .bounds import (
    BoundParams,
    DELTA_MAX,
    FACTOR2_C_LIMIT,
    LargeComponentsEstimate,
    chernoff_g,
    component_prob_bound,
    expected_large_components,
    harmonic_cycle_bound,
    janson_delta_upper,
    janson_mu_lower,
    lower_tail_bound,
    lower_tail_bound_center,
    partition_constants,
    tau1_bound,
    upper_tail_bound,
)
from .digraph import (
    Digraph,
    EarDecomposition,
    MultiDigraph,
    SccDecomposition,
    count_cycles_up_to,
    critical_probability,
    cube_root,
    ear_decomposition,
    heart,
    read_digraph,
    sample_digraph,
    sample_digraph_coupled,
    sample_undirected_edges,
    scc_decompose,
    undirected_largest_component,
    write_digraph,
)
from .enumeration import (
    BRUTE_FORCE_MAX_VERTICES,
    DegreeSequence,
    ENUMERATION_CONSTANT,
    PreheartConfig,
    RefinedBound,
    SigmaStats,
    TpMoments,
    TruncatedPoisson,
    brute_force_scc_count,
    ear_bound,
    ear_bound_log,
    estimate_sigma_probability,
    preheart_count,
    refined_bound,
    sample_degree_sequence,
    sample_preheart,
    strong_connectivity_census,
    truncated_poisson,
)
from .errors import (
    CritdigraphError,
    FormatError,
    ParameterError,
    ResourceLimitError,
    StructureError,
)
from .exploration import (
    CoupledDominationResult,
    ExplorationTrace,
    PROCESS_VARIANTS,
    ProcessTauResult,
    certify_component,
    explore,
    process_horizon,
    simulate_coupled_domination,
    simulate_process_tau,
)
from .montecarlo import (
    ConjectureResult,
    CoupledMedianResult,
    CycleWindowResult,
    ExcessResult,
    ExperimentConfig,
    TailEstimate,
    TailRecord,
    Z_99,
    conjecture_experiment,
    coupled_median_experiment,
    cycle_window_experiment,
    estimate_tail,
    exact_cycle_expectation,
    excess_experiment,
    largest_scc_sizes,
    wilson,
    wilson_radius,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BRUTE_FORCE_MAX_VERTICES",
    "BoundParams",
    "ConjectureResult",
    "CoupledDominationResult",
    "CoupledMedianResult",
    "CritdigraphError",
    "CycleWindowResult",
    "DELTA_MAX",
    "DegreeSequence",
    "Digraph",
    "ENUMERATION_CONSTANT",
    "EarDecomposition",
    "ExcessResult",
    "ExperimentConfig",
    "ExplorationTrace",
    "FACTOR2_C_LIMIT",
    "FormatError",
    "LargeComponentsEstimate",
    "MultiDigraph",
    "PROCESS_VARIANTS",
    "ParameterError",
    "PreheartConfig",
    "ProcessTauResult",
    "RefinedBound",
    "ResourceLimitError",
    "SccDecomposition",
    "SigmaStats",
    "StructureError",
    "TailEstimate",
    "TailRecord",
    "TpMoments",
    "TruncatedPoisson",
    "Z_99",
    "brute_force_scc_count",
    "certify_component",
    "chernoff_g",
    "component_prob_bound",
    "conjecture_experiment",
    "count_cycles_up_to",
    "coupled_median_experiment",
    "critical_probability",
    "cube_root",
    "cycle_window_experiment",
    "ear_bound",
    "ear_bound_log",
    "ear_decomposition",
    "estimate_sigma_probability",
    "estimate_tail",
    "exact_cycle_expectation",
    "excess_experiment",
    "expected_large_components",
    "explore",
    "harmonic_cycle_bound",
    "heart",
    "janson_delta_upper",
    "janson_mu_lower",
    "largest_scc_sizes",
    "lower_tail_bound",
    "lower_tail_bound_center",
    "partition_constants",
    "preheart_count",
    "process_horizon",
    "read_digraph",
    "refined_bound",
    "sample_degree_sequence",
    "sample_digraph",
    "sample_digraph_coupled",
    "sample_preheart",
    "sample_undirected_edges",
    "scc_decompose",
    "simulate_coupled_domination",
    "simulate_process_tau",
    "strong_connectivity_census",
    "tau1_bound",
    "truncated_poisson",
    "undirected_largest_component",
    "upper_tail_bound",
    "wilson",
    "wilson_radius",
    "write_digraph",
]
