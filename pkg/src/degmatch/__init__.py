"""Degree sequences realizing labelled perfect matchings and h-factors.

Feasibility checks (Erdos-Gallai and its matching/factor strengthenings),
constructive realizers, the switch calculus connecting realizations, the
realizability preorder on matchings, and degree-sequence packing; everything
is cross-validated against an exact f-factor oracle at desk scale.
"""

from .core import (
    CheckReport,
    CheckRow,
    DegreeSequence,
    LabeledGraph,
    Matching,
    SpanningFactor,
    SwitchMove,
    build_graph,
    canonical_h_factor,
    canonical_matching,
    complete_graph,
    degree_sequences,
    graph_from_text,
    graph_to_text,
    perfect_matchings,
    phi,
)
from .errors import (
    DegmatchError,
    InvalidInput,
    InvariantViolation,
    NotGraphicError,
    PreconditionError,
    ResourceLimitError,
)
from .graphic import eg_check, f_factor, hh_realize, lovasz_pm_check, max_matching
from .hfactor import (
    common_realizable_two_factors,
    conjecture_scan,
    disjoint_pms,
    doublestar_check,
    enumerate_realizations,
    enumerate_two_factors,
    factor_to_text,
    hfactor_oracle,
    merge_cliques,
    merge_cliques_with_witness,
    near_one_factorization,
    star_product,
    two_factor_realizable,
)
from .mplus import (
    RealizeTrace,
    TightnessExample,
    corollary_bound_holds,
    realize_mplus,
    realize_mplus_trace,
    star_check,
    tightness_instance,
    tightness_scan,
)
from .packing import BindingNumber, binding_number, pack, pack_report
from .preorder import (
    ConjectureReport,
    PreorderTable,
    build_preorder,
    check_conjectures,
    hasse_dot,
)
from .switches import (
    all_switches,
    classify_switch,
    lift_switch,
    matching_from_text,
    matching_to_text,
    realize_matching_oracle,
    realize_matching_switchwise,
    switch_path,
    switch_step,
)

__version__ = "0.1.0"

__all__ = [
    "BindingNumber",
    "CheckReport",
    "CheckRow",
    "ConjectureReport",
    "DegmatchError",
    "DegreeSequence",
    "InvalidInput",
    "InvariantViolation",
    "LabeledGraph",
    "Matching",
    "NotGraphicError",
    "PreconditionError",
    "PreorderTable",
    "RealizeTrace",
    "ResourceLimitError",
    "SpanningFactor",
    "SwitchMove",
    "TightnessExample",
    "all_switches",
    "binding_number",
    "build_graph",
    "build_preorder",
    "canonical_h_factor",
    "canonical_matching",
    "check_conjectures",
    "classify_switch",
    "common_realizable_two_factors",
    "complete_graph",
    "conjecture_scan",
    "corollary_bound_holds",
    "degree_sequences",
    "disjoint_pms",
    "doublestar_check",
    "eg_check",
    "enumerate_realizations",
    "enumerate_two_factors",
    "f_factor",
    "factor_to_text",
    "graph_from_text",
    "graph_to_text",
    "hasse_dot",
    "hfactor_oracle",
    "hh_realize",
    "lift_switch",
    "lovasz_pm_check",
    "matching_from_text",
    "matching_to_text",
    "max_matching",
    "merge_cliques",
    "merge_cliques_with_witness",
    "near_one_factorization",
    "pack",
    "pack_report",
    "perfect_matchings",
    "phi",
    "realize_matching_oracle",
    "realize_matching_switchwise",
    "realize_mplus",
    "realize_mplus_trace",
    "star_check",
    "star_product",
    "switch_path",
    "switch_step",
    "tightness_instance",
    "tightness_scan",
    "two_factor_realizable",
]
