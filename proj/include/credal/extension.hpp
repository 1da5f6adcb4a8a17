#pragma once

#include <cstdint>
#include <vector>

#include "credal/core.hpp"

namespace credal {

/// Evaluation strategy for natural extensions.
///
/// automatic uses the Choquet closed form for interval models and the LP
/// otherwise; lp forces the linear program; choquet forces the closed form
/// and is rejected for models where it is not exact.
enum class Backend { automatic, lp, choquet };

/// Set function on all subsets of a state space, stored as a table indexed
/// by event bitmask. Keeps the original table alongside a conjugation bit,
/// so conjugate() is an exact involution.
class SetFunction {
public:
    enum class Kind { lower, upper };

    SetFunction(Kind kind, std::size_t states, std::vector<double> values);

    Kind kind() const { return kind_; }
    std::size_t states() const { return states_; }
    std::size_t subsets() const { return std::size_t{1} << states_; }

    double value(std::uint32_t event) const;
    std::vector<double> materialize() const;

    /// Conjugate set function v'(A) = 1 - v(complement of A); flips kind.
    SetFunction conjugate() const;

    /// Boundary values v(empty) = 0 and v(all) = 1, monotonicity under
    /// inclusion, and range within [0, 1], all within kTolerance.
    Diagnostics validate() const;

    bool operator==(const SetFunction& other) const;

private:
    Kind kind_;
    std::size_t states_;
    std::vector<double> values_;
    bool flipped_ = false;
};

/// Tightest lower probability on events induced by interval bounds:
/// max(sum of lower bounds inside, 1 - sum of upper bounds outside).
SetFunction lower_set_function(const ProbabilityIntervals& iv);

/// Direct evaluation of the induced bounds on one event, without
/// materializing the full table.
double interval_lower_event(const ProbabilityIntervals& iv, std::uint32_t event);
double interval_upper_event(const ProbabilityIntervals& iv, std::uint32_t event);

/// 2-monotonicity for lower set functions, 2-alternation for upper ones:
/// v(A or B) + v(A and B) on the tight side of v(A) + v(B) for all pairs.
/// Exhaustive over event pairs; rejects more than 12 states.
bool check_two_monotone(const SetFunction& sf);

/// Choquet integral of f against an upper (resp. lower) set function.
/// Exact for the induced upper (lower) expectation when the set function
/// is 2-alternating (2-monotone).
double choquet_upper(const SetFunction& sf, const Gamble& f);
double choquet_lower(const SetFunction& sf, const Gamble& f);

/// Upper expectation of f over the credal set described by spec.
double upper_natural_extension(const CredalSpec& spec, const Gamble& f,
                               Backend backend = Backend::automatic);
/// Lower expectation, computed as -upper(-f).
double lower_natural_extension(const CredalSpec& spec, const Gamble& f,
                               Backend backend = Backend::automatic);

/// Extreme points of the credal set of an interval model, deduplicated.
/// Rejects more than 8 states.
std::vector<MassFunction> credal_vertices(const ProbabilityIntervals& iv);

}  // namespace credal
