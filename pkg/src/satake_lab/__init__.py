"""Exact root-datum combinatorics, Kostant-type cohomology constituents and
central-character checks for mod-p Satake targets."""

__version__ = "0.1.0"

from .checkers import (  # noqa: E402
    CheckReport,
    Criterion,
    Verdict,
    check_orthogonality_direct,
    check_p_bound,
    check_sufficient_criterion,
    p_valuation_table,
)
from .cohomology import (  # noqa: E402
    group_cohomology_report,
    kostant_report,
    left_adjoint_report,
    parameter_support,
    principal_series_report,
    satake_target_report,
)
from .levi import build_levi, delta_character, is_abelian_nilradical, xi_and_hM  # noqa: E402
from .oracle import ce_cohomology_trivial, chevalley_constants, sl2_module_oracle  # noqa: E402
from .root_datum import CartanType, Preset, RootDatum, build_raw_root_datum, build_root_datum  # noqa: E402
from .weights import (  # noqa: E402
    CocharBasis,
    ModPCharacter,
    freudenthal,
    is_p_small,
    restrict_mod_p,
    torus_basis,
    weight_string_max,
    weyl_dim,
)
from .weyl import dot_action, enumerate_weyl, longest_relative_element, minimal_coset_reps, weak_order_leq  # noqa: E402

__all__ = [
    "CartanType", "Preset", "RootDatum", "build_root_datum", "build_raw_root_datum",
    "enumerate_weyl", "minimal_coset_reps", "dot_action", "weak_order_leq", "longest_relative_element",
    "ModPCharacter", "CocharBasis", "torus_basis", "is_p_small", "weyl_dim", "freudenthal",
    "weight_string_max", "restrict_mod_p",
    "build_levi", "xi_and_hM", "is_abelian_nilradical", "delta_character",
    "CheckReport", "Verdict", "Criterion", "check_p_bound", "check_orthogonality_direct",
    "check_sufficient_criterion", "p_valuation_table",
    "kostant_report", "group_cohomology_report", "left_adjoint_report", "satake_target_report",
    "principal_series_report", "parameter_support",
    "chevalley_constants", "ce_cohomology_trivial", "sl2_module_oracle",
]
