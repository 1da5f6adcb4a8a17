#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "credal/chain.hpp"
#include "credal/core.hpp"

namespace credal {

/// Whether a reported value is the exact quantity or only the lower bound
/// obtained by sweeping indicator gambles.
enum class Exactness { exact, event_lower_bound };

struct FlaggedValue {
    double value = 0.0;
    Exactness exactness = Exactness::exact;
};

/// Contraction certificate: the r-step coefficient rho of an operator,
/// with the exactness of how it was obtained.
struct ErgodicityProfile {
    long r = 1;
    double rho = 1.0;
    Exactness flag = Exactness::exact;
};

/// Maximum over an event sweep, with the smallest attaining bitmask.
struct EventMax {
    double value = 0.0;
    std::uint32_t event = 0;
    Exactness exactness = Exactness::exact;
};

/// Dobrushin contraction coefficient of a stochastic matrix: the largest
/// total variation distance between two rows.
double dobrushin(const std::vector<std::vector<double>>& matrix);

/// True when the spec's event bounds form a 2-monotone set function whose
/// Choquet integral recovers the natural extension (interval, precise,
/// vacuous, and contaminations thereof).
bool is_two_monotone_induced(const CredalSpec& spec);

/// Upper (lower) probabilities of all 2^n events, indexed by bitmask.
/// n defaults to the spec dimension; required for dimension-free specs.
std::vector<double> upper_event_values(const CredalSpec& spec,
                                       std::optional<std::size_t> n = std::nullopt);
std::vector<double> lower_event_values(const CredalSpec& spec,
                                       std::optional<std::size_t> n = std::nullopt);

/// Largest difference of upper event probabilities between two specs over
/// the shared event space. Exact for the expectation-functional distance
/// when both specs are 2-monotone induced; a lower bound otherwise.
EventMax distance_over_events(const CredalSpec& a, const CredalSpec& b,
                              std::optional<std::size_t> n = std::nullopt);

/// Exact distance between the induced upper expectations; requires both
/// specs 2-monotone induced.
double distance_two_monotone(const CredalSpec& a, const CredalSpec& b,
                             std::optional<std::size_t> n = std::nullopt);

/// Event-sweep distance with its exactness flag.
FlaggedValue distance_event_lower_bound(const CredalSpec& a, const CredalSpec& b,
                                        std::optional<std::size_t> n = std::nullopt);

/// Largest gap between upper and lower event probabilities. Exact for
/// every credal set.
double imprecision(const CredalSpec& spec, std::optional<std::size_t> n = std::nullopt);
EventMax imprecision_over_events(const CredalSpec& spec,
                                 std::optional<std::size_t> n = std::nullopt);

/// Rowwise distance between two operators on the same space: the largest
/// per-row distance. Exact iff every row pair is.
FlaggedValue operator_distance(const UpperTransitionOperator& a,
                               const UpperTransitionOperator& b);

/// Largest rowwise imprecision; exact.
double operator_imprecision(const UpperTransitionOperator& t);

/// One-step weak coefficient: largest distance between two rows. Requires
/// all rows 2-monotone induced.
double weak_ergodicity_coefficient(const UpperTransitionOperator& t);

/// r-step weak coefficient. Exact for one step on 2-monotone rows and for
/// precise operators at any r (matrix power + Dobrushin); otherwise the
/// indicator sweep lower bound, capped by the one-step value to the r-th
/// power when that cap is exact.
FlaggedValue weak_ergodicity_n(const UpperTransitionOperator& t, long r);

/// Uniform coefficient: worst-case Dobrushin coefficient over all
/// compatible transition matrices, attained on extreme-point rows.
/// Supports at most 5 states and rows with enumerable vertices.
double uniform_ergodicity_coefficient(const UpperTransitionOperator& t);

/// Measured distance between the n-step distribution functionals of two
/// chains on the same space: event sweep of the n-fold images under the
/// initial models. Exact at n = 0 for 2-monotone induced initial models,
/// an event lower bound otherwise.
FlaggedValue nstep_distribution_distance(const CredalSpec& initial_a,
                                         const UpperTransitionOperator& a,
                                         const CredalSpec& initial_b,
                                         const UpperTransitionOperator& b, long n);

/// Measured distance between n-fold operator iterates: the largest
/// rowwise event-sweep difference. Exact at n = 1 for 2-monotone rows.
FlaggedValue nstep_operator_distance(const UpperTransitionOperator& a,
                                     const UpperTransitionOperator& b, long n);

/// Measured imprecision of the n-step distribution: the largest gap
/// between upper and lower n-step event probabilities. Exact.
double nstep_imprecision(const CredalSpec& initial, const UpperTransitionOperator& t, long n);

enum class Convergence { converges, unknown };

/// Search for a contraction certificate rho(r) < 1, r = 1..r_max.
struct ConvergenceResult {
    Convergence verdict = Convergence::unknown;
    std::optional<long> certified_r;  ///< first r with coefficient < 1
    ErgodicityProfile profile;        ///< certificate, or last coefficient examined
};

ConvergenceResult convergence_check(const UpperTransitionOperator& t, long r_max);

}  // namespace credal
