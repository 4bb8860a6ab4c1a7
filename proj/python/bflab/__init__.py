"""Exact sensitivity, block sensitivity and certificate complexity toolkit."""

from ._core import (  # noqa: F401
    BooleanFunction,
    CapacityError,
    Construction,
    HypothesisError,
    MeasureProfile,
    block_sensitivity_at,
    certificate_at,
    conjecture_report,
    contradictions,
    g0,
    graph_report,
    largest_nonconstant_subfunction,
    or_compose_g0,
    overlaps,
    profile,
    search_report,
    sensitivity_at,
    sweep_report,
    witness_report,
    __version__,
)
