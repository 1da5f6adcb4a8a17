#include "credal/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "credal/errors.hpp"

namespace credal {

namespace {

void require_profile(const ErgodicityProfile& profile, bool allow_unverified) {
    if (profile.r < 1) throw std::invalid_argument("profile step count must be positive");
    if (!std::isfinite(profile.rho) || profile.rho < 0.0 || profile.rho > 1.0)
        throw std::invalid_argument("profile coefficient must lie in [0, 1]");
    if (profile.flag != Exactness::exact && !allow_unverified)
        throw validation_error(
            "ergodicity profile is an unverified event lower bound; "
            "a smaller true coefficient would weaken the bound");
}

void require_fraction(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument(std::string(what) + " must be non-negative");
}

BoundValue clamp_unit(double raw) {
    BoundValue out;
    out.raw = raw;
    out.clamped = raw > 1.0;
    out.value = std::min(raw, 1.0);
    return out;
}

double rho_pow_k(long n, const ErgodicityProfile& profile) {
    const long k = n / profile.r;
    return std::pow(profile.rho, static_cast<double>(k));
}

}  // namespace

double sum_rho_bound(long n, const ErgodicityProfile& profile) {
    if (n < 0) throw std::invalid_argument("step count must be non-negative");
    require_profile(profile, true);
    const long k = n / profile.r;
    const long m = n % profile.r;
    if (1.0 - profile.rho < 1e-15) return static_cast<double>(n);
    const double rk = std::pow(profile.rho, static_cast<double>(k));
    return static_cast<double>(profile.r) * (1.0 - rk) / (1.0 - profile.rho) +
           static_cast<double>(m) * rk;
}

double sum_rho_bound_limit(const ErgodicityProfile& profile) {
    require_profile(profile, true);
    if (1.0 - profile.rho < 1e-15)
        throw validation_error("coefficient 1 gives no finite limit");
    return static_cast<double>(profile.r) / (1.0 - profile.rho);
}

BoundValue distribution_error_bound(const PerturbationInputs& in, long n,
                                    bool allow_unverified) {
    require_profile(in.profile, allow_unverified);
    require_fraction(in.initial_distance, "initial distance");
    require_fraction(in.operator_distance, "operator distance");
    return clamp_unit(in.initial_distance * rho_pow_k(n, in.profile) +
                      in.operator_distance * sum_rho_bound(n, in.profile));
}

BoundValue distribution_error_bound_limit(const PerturbationInputs& in,
                                          bool allow_unverified) {
    require_profile(in.profile, allow_unverified);
    require_fraction(in.operator_distance, "operator distance");
    return clamp_unit(in.operator_distance * sum_rho_bound_limit(in.profile));
}

BoundValue operator_error_bound(double one_step_distance, long n,
                                const ErgodicityProfile& profile, bool allow_unverified) {
    require_profile(profile, allow_unverified);
    require_fraction(one_step_distance, "operator distance");
    return clamp_unit(one_step_distance * sum_rho_bound(n, profile));
}

BoundValue operator_error_bound_limit(double one_step_distance,
                                      const ErgodicityProfile& profile,
                                      bool allow_unverified) {
    require_profile(profile, allow_unverified);
    require_fraction(one_step_distance, "operator distance");
    return clamp_unit(one_step_distance * sum_rho_bound_limit(profile));
}

namespace {

std::pair<double, double> imprecision_inputs(const PerturbationInputs& in) {
    if (!in.initial_imprecision || !in.operator_imprecision)
        throw std::invalid_argument("imprecision bound needs both imprecision inputs");
    require_fraction(*in.initial_imprecision, "initial imprecision");
    require_fraction(*in.operator_imprecision, "operator imprecision");
    return {*in.initial_imprecision, *in.operator_imprecision};
}

}  // namespace

BoundValue imprecision_bound(const PerturbationInputs& in, long n, bool allow_unverified) {
    require_profile(in.profile, allow_unverified);
    const auto [i0, ihat] = imprecision_inputs(in);
    return clamp_unit(i0 * rho_pow_k(n, in.profile) + ihat * sum_rho_bound(n, in.profile));
}

BoundValue imprecision_bound_limit(const PerturbationInputs& in, bool allow_unverified) {
    require_profile(in.profile, allow_unverified);
    const auto [i0, ihat] = imprecision_inputs(in);
    (void)i0;
    return clamp_unit(ihat * sum_rho_bound_limit(in.profile));
}

CredalSpec contaminate_functional(const CredalSpec& spec, double eps) {
    return CredalSpec::contaminated(spec, eps);
}

UpperTransitionOperator contaminate_operator(const UpperTransitionOperator& t, double eps) {
    std::vector<CredalSpec> rows;
    rows.reserve(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
        rows.push_back(CredalSpec::contaminated(t.row(x), eps));
    return UpperTransitionOperator(std::move(rows), t.backend());
}

ContaminationMetrics contamination_metrics(const CredalSpec& initial,
                                           const UpperTransitionOperator& t, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("contamination epsilon must lie in (0, 1)");
    const std::size_t n = t.size();
    const CredalSpec vac = CredalSpec::vacuous();

    ContaminationMetrics m;
    m.epsilon = eps;
    m.vacuous_distance_initial = distance_two_monotone(initial, vac, n);
    for (std::size_t x = 0; x < n; ++x)
        m.vacuous_distance_operator =
            std::max(m.vacuous_distance_operator, distance_two_monotone(t.row(x), vac, n));
    m.rho = weak_ergodicity_coefficient(t);
    m.initial_imprecision = imprecision(initial, n);
    m.operator_imprecision = operator_imprecision(t);

    m.spec_distance = eps * m.vacuous_distance_initial;
    m.operator_distance = eps * m.vacuous_distance_operator;
    m.pair_scale = 1.0 - eps;
    m.contaminated_rho = (1.0 - eps) * m.rho;
    m.contaminated_imprecision = (1.0 - eps) * m.initial_imprecision + eps;
    m.contaminated_operator_imprecision = (1.0 - eps) * m.operator_imprecision + eps;
    return m;
}

namespace {

PerturbationInputs contamination_inputs(const ContaminationMetrics& m) {
    PerturbationInputs in;
    in.initial_distance = m.spec_distance;
    in.operator_distance = m.operator_distance;
    // The contaminated coefficient is strictly below 1 for any eps > 0, so
    // every bound built from it is finite.
    in.profile = ErgodicityProfile{1, m.contaminated_rho, Exactness::exact};
    in.initial_imprecision = m.contaminated_imprecision;
    in.operator_imprecision = m.contaminated_operator_imprecision;
    return in;
}

}  // namespace

ContaminationBounds contamination_bounds(const ContaminationMetrics& m, long n) {
    const PerturbationInputs in = contamination_inputs(m);
    return ContaminationBounds{distribution_error_bound(in, n), imprecision_bound(in, n)};
}

ContaminationBounds contamination_bounds_limit(const ContaminationMetrics& m) {
    const PerturbationInputs in = contamination_inputs(m);
    return ContaminationBounds{distribution_error_bound_limit(in), imprecision_bound_limit(in)};
}

}  // namespace credal
