"""Imprecise Markov chains: credal sets, natural extensions, transition
operators, ergodicity metrics, and perturbation bounds."""

from ._core import (
    Backend,
    ChainSpec,
    CredalSpec,
    ParseError,
    TransitionOperator,
    UnsupportedError,
    ValidationError,
    contamination_bounds,
    contamination_metrics,
    convergence_check,
    credal_vertices,
    distance_event_lower_bound,
    distance_two_monotone,
    distribution_bounds,
    distribution_error_bound,
    dobrushin,
    fixture_text,
    imprecision,
    imprecision_bound,
    is_two_monotone_induced,
    load_fixture,
    lower_natural_extension,
    nstep_distribution_distance,
    nstep_event_bounds,
    nstep_imprecision,
    nstep_mass_bounds,
    nstep_operator_distance,
    operator_distance,
    operator_error_bound,
    operator_imprecision,
    parse_chain_spec,
    parse_chain_spec_text,
    report_analyze,
    report_compare,
    report_contaminate,
    report_reproduce,
    serialize_chain_spec,
    sum_rho_bound,
    sum_rho_bound_limit,
    uniform_ergodicity_coefficient,
    upper_natural_extension,
    vacuous_operator,
    validate_spec,
    weak_ergodicity_coefficient,
    weak_ergodicity_n,
)

__version__ = "0.1.0"

__all__ = [
    "Backend",
    "ChainSpec",
    "CredalSpec",
    "ParseError",
    "TransitionOperator",
    "UnsupportedError",
    "ValidationError",
    "contamination_bounds",
    "contamination_metrics",
    "convergence_check",
    "credal_vertices",
    "distance_event_lower_bound",
    "distance_two_monotone",
    "distribution_bounds",
    "distribution_error_bound",
    "dobrushin",
    "fixture_text",
    "imprecision",
    "imprecision_bound",
    "is_two_monotone_induced",
    "load_fixture",
    "lower_natural_extension",
    "nstep_distribution_distance",
    "nstep_event_bounds",
    "nstep_imprecision",
    "nstep_mass_bounds",
    "nstep_operator_distance",
    "operator_distance",
    "operator_error_bound",
    "operator_imprecision",
    "parse_chain_spec",
    "parse_chain_spec_text",
    "report_analyze",
    "report_compare",
    "report_contaminate",
    "report_reproduce",
    "serialize_chain_spec",
    "sum_rho_bound",
    "sum_rho_bound_limit",
    "uniform_ergodicity_coefficient",
    "upper_natural_extension",
    "vacuous_operator",
    "validate_spec",
    "weak_ergodicity_coefficient",
    "weak_ergodicity_n",
]
