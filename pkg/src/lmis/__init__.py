"""Local maximum independent sets: set families, exchange augmentation,
closed-neighborhood decomposition, and a verification harness."""

from .augmentation import (
    AugmentationResult,
    AugmentoidVerdict,
    canonical_augment,
    check_canonical_augmentoid,
    check_generic_augmentoid,
    verify_lemmas,
)
from .decomposition import (
    DecompositionReport,
    count_extensions,
    decompose,
    decompose_unchecked,
    omega_extensions,
    psi_extensions,
)
from .errors import (
    EmptyInput,
    FamilyEmpty,
    ForeignSet,
    GuardrailExceeded,
    InternalContradiction,
    LmisError,
    MalformedGraph6,
    NotLocalMax,
    OverlappingSides,
    ParseError,
    SelfLoop,
)
from .graphs import (
    Graph,
    InducedSubgraph,
    VertexSet,
    closed_neighborhood,
    delete_closed_neighborhood,
    emit_graph6,
    enumerate_labeled_graphs,
    induced_subgraph,
    is_bipartite,
    open_neighborhood,
    parse_edge_list,
    parse_graph6,
)
from .harness import (
    CHECK_REGISTRY,
    MAX_GUARDRAIL_N,
    GraphContext,
    RunSummary,
    enumeration_lines,
    resolve_checks,
    run_checks,
    verify_stream,
)
from .independence import (
    CriticalProfile,
    FamilyKind,
    SetFamily,
    alpha,
    core_and_corona,
    critical_difference,
    diff,
    enumerate_family,
    enumerate_omega,
    is_critical,
    is_crown,
    is_independent,
    is_konig_egervary,
    is_local_max_independent,
    require_local_max,
)
from .matching import (
    Matching,
    SaturationResult,
    cross_matching,
    max_bipartite_matching,
    max_matching,
    saturating_matching,
)
from .reporting import REPORT_SCHEMA, CheckOutcome, VerificationReport

__all__ = [
    "AugmentationResult",
    "AugmentoidVerdict",
    "CHECK_REGISTRY",
    "CheckOutcome",
    "CriticalProfile",
    "DecompositionReport",
    "EmptyInput",
    "FamilyEmpty",
    "FamilyKind",
    "ForeignSet",
    "Graph",
    "GraphContext",
    "GuardrailExceeded",
    "InducedSubgraph",
    "InternalContradiction",
    "LmisError",
    "MAX_GUARDRAIL_N",
    "MalformedGraph6",
    "Matching",
    "NotLocalMax",
    "OverlappingSides",
    "ParseError",
    "REPORT_SCHEMA",
    "RunSummary",
    "SaturationResult",
    "SelfLoop",
    "SetFamily",
    "VerificationReport",
    "VertexSet",
    "alpha",
    "canonical_augment",
    "check_canonical_augmentoid",
    "check_generic_augmentoid",
    "closed_neighborhood",
    "core_and_corona",
    "count_extensions",
    "critical_difference",
    "cross_matching",
    "decompose",
    "decompose_unchecked",
    "delete_closed_neighborhood",
    "diff",
    "emit_graph6",
    "enumerate_family",
    "enumerate_labeled_graphs",
    "enumerate_omega",
    "enumeration_lines",
    "induced_subgraph",
    "is_bipartite",
    "is_critical",
    "is_crown",
    "is_independent",
    "is_konig_egervary",
    "is_local_max_independent",
    "max_bipartite_matching",
    "max_matching",
    "omega_extensions",
    "open_neighborhood",
    "parse_edge_list",
    "parse_graph6",
    "psi_extensions",
    "require_local_max",
    "resolve_checks",
    "run_checks",
    "saturating_matching",
    "verify_lemmas",
    "verify_stream",
]
