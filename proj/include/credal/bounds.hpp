#pragma once

#include <optional>

#include "credal/chain.hpp"
#include "credal/core.hpp"
#include "credal/metrics.hpp"

namespace credal {

/// A theoretical bound, clamped into [0, 1]. raw keeps the unclamped
/// value; clamped marks that the clamp was active.
struct BoundValue {
    double value = 0.0;
    double raw = 0.0;
    bool clamped = false;
};

/// Measured quantities feeding the perturbation bounds: the initial
/// distance, the one-step operator distance, and a contraction profile.
/// The imprecision fields are only needed by imprecision_bound.
struct PerturbationInputs {
    double initial_distance = 0.0;
    double operator_distance = 0.0;
    ErgodicityProfile profile;
    std::optional<double> initial_imprecision;
    std::optional<double> operator_imprecision;
};

/// Geometric accumulation factor for n steps under a profile (r, rho):
/// with n = k*r + m, r * (1 - rho^k) / (1 - rho) + m * rho^k, read as n
/// when rho = 1. Monotone in n.
double sum_rho_bound(long n, const ErgodicityProfile& profile);

/// Limit of sum_rho_bound as n grows: r / (1 - rho). Requires rho < 1.
double sum_rho_bound_limit(const ErgodicityProfile& profile);

/// Bound on the distance between the n-step distributions of two chains:
/// initial_distance * rho^k + operator_distance * sum_rho_bound(n).
BoundValue distribution_error_bound(const PerturbationInputs& in, long n,
                                    bool allow_unverified = false);
BoundValue distribution_error_bound_limit(const PerturbationInputs& in,
                                          bool allow_unverified = false);

/// Bound on the distance between n-fold operator iterates:
/// one_step_distance * sum_rho_bound(n).
BoundValue operator_error_bound(double one_step_distance, long n,
                                const ErgodicityProfile& profile,
                                bool allow_unverified = false);
BoundValue operator_error_bound_limit(double one_step_distance,
                                      const ErgodicityProfile& profile,
                                      bool allow_unverified = false);

/// Bound on the n-step imprecision of a single chain:
/// initial_imprecision * rho^k + operator_imprecision * sum_rho_bound(n).
BoundValue imprecision_bound(const PerturbationInputs& in, long n,
                             bool allow_unverified = false);
BoundValue imprecision_bound_limit(const PerturbationInputs& in,
                                   bool allow_unverified = false);

/// Mixture (1 - eps) * model + eps * vacuous; eps in (0, 1).
CredalSpec contaminate_functional(const CredalSpec& spec, double eps);
UpperTransitionOperator contaminate_operator(const UpperTransitionOperator& t, double eps);

/// Closed-form effects of contaminating a chain, all exact:
/// distances to the contaminated objects, the contraction coefficient and
/// imprecision of the contaminated chain, and the factor by which
/// contamination shrinks distances between pairs.
struct ContaminationMetrics {
    double epsilon = 0.0;
    // measured on the original chain
    double vacuous_distance_initial = 0.0;   ///< distance initial model to vacuous
    double vacuous_distance_operator = 0.0;  ///< largest rowwise distance to vacuous
    double rho = 0.0;
    double initial_imprecision = 0.0;
    double operator_imprecision = 0.0;
    // induced by contamination
    double spec_distance = 0.0;      ///< eps * vacuous_distance_initial
    double operator_distance = 0.0;  ///< eps * vacuous_distance_operator
    double pair_scale = 0.0;         ///< 1 - eps
    double contaminated_rho = 0.0;   ///< (1 - eps) * rho, always below 1
    double contaminated_imprecision = 0.0;
    double contaminated_operator_imprecision = 0.0;
};

ContaminationMetrics contamination_metrics(const CredalSpec& initial,
                                           const UpperTransitionOperator& t, double eps);

/// Perturbation bounds for the contaminated chain against the original,
/// using the contaminated contraction coefficient. Always finite.
struct ContaminationBounds {
    BoundValue distribution_error;
    BoundValue imprecision;
};

ContaminationBounds contamination_bounds(const ContaminationMetrics& m, long n);
ContaminationBounds contamination_bounds_limit(const ContaminationMetrics& m);

}  // namespace credal
