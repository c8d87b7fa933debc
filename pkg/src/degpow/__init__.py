"""Degree power sums of C5-free graphs: exact constructions, symbolic
asymptotics, exhaustive small-order search, and proof-step verification."""

from .graphs import (
    MAX_ORDER,
    CapacityError,
    SmallGraph,
    canonical_form,
    canonical_relabel,
    contains_cycle,
    contains_path_order,
    degree_power_sum,
    degree_sequence,
    from_edges,
    from_graph6,
    induced_subgraph,
    is_complete_bipartite,
    to_graph6,
)
from .constructions import (
    CompleteBipartite,
    DegreeProfile,
    GPrime,
    GStar,
    HubAttachment,
    JoinCliqueEmpty,
    Turan,
    bipartite_completion,
    build,
    degree_profile,
    ep_turan2_closed_form,
    hub_with_components,
    parse_spec,
    spec_order,
)
from .asymptotics import (
    FamilyComparison,
    FPositivityReport,
    NPolynomial,
    ParametricFamily,
    best_biclique_split,
    coefficient,
    compare_families,
    expand_ep,
    f_value,
    family_of,
    leading_coefficient,
    optimize_c,
    split_objective,
    verify_f_positive,
)
from .search import (
    DecompositionReport,
    MaximizerRecord,
    ObservationReport,
    SearchResult,
    SweepResult,
    classification_report,
    classify_maximizers,
    collect_c5_free,
    enumerate_c5_free,
    ex_p,
    max_degree_ratio,
    neighborhood_decomposition,
    search_extremal,
    sweep_bipartite_completion,
    sweep_neighborhood_validity,
    sweep_observations,
    validate_observations,
)
from .claims import run_all, run_claim

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER",
    "CapacityError",
    "SmallGraph",
    "canonical_form",
    "canonical_relabel",
    "contains_cycle",
    "contains_path_order",
    "degree_power_sum",
    "degree_sequence",
    "from_edges",
    "from_graph6",
    "induced_subgraph",
    "is_complete_bipartite",
    "to_graph6",
    "CompleteBipartite",
    "DegreeProfile",
    "GPrime",
    "GStar",
    "HubAttachment",
    "JoinCliqueEmpty",
    "Turan",
    "bipartite_completion",
    "build",
    "degree_profile",
    "ep_turan2_closed_form",
    "hub_with_components",
    "parse_spec",
    "spec_order",
    "FamilyComparison",
    "FPositivityReport",
    "NPolynomial",
    "ParametricFamily",
    "best_biclique_split",
    "coefficient",
    "compare_families",
    "expand_ep",
    "f_value",
    "family_of",
    "leading_coefficient",
    "optimize_c",
    "split_objective",
    "verify_f_positive",
    "DecompositionReport",
    "MaximizerRecord",
    "ObservationReport",
    "SearchResult",
    "SweepResult",
    "classification_report",
    "classify_maximizers",
    "collect_c5_free",
    "enumerate_c5_free",
    "ex_p",
    "max_degree_ratio",
    "neighborhood_decomposition",
    "search_extremal",
    "sweep_bipartite_completion",
    "sweep_neighborhood_validity",
    "sweep_observations",
    "validate_observations",
    "run_all",
    "run_claim",
    "__version__",
]
