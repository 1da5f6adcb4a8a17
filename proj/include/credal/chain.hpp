#pragma once

#include <utility>
#include <vector>

#include "credal/core.hpp"
#include "credal/extension.hpp"

namespace credal {

/// Row-indexed family of credal specs: row x describes the set of
/// distributions of the next state given current state x. Acts on gambles
/// by taking the rowwise upper (or lower) expectation.
class UpperTransitionOperator {
public:
    explicit UpperTransitionOperator(std::vector<CredalSpec> rows,
                                     Backend backend = Backend::automatic);

    /// Precise rows from a stochastic matrix.
    static UpperTransitionOperator from_matrix(const std::vector<std::vector<double>>& matrix);
    /// Interval rows from elementwise lower and upper matrices.
    static UpperTransitionOperator from_interval_matrices(
        const std::vector<std::vector<double>>& lower,
        const std::vector<std::vector<double>>& upper);
    static UpperTransitionOperator vacuous(std::size_t n);

    std::size_t size() const { return rows_.size(); }
    const CredalSpec& row(std::size_t x) const { return rows_.at(x); }
    const std::vector<CredalSpec>& rows() const { return rows_; }

    Backend backend() const { return backend_; }
    UpperTransitionOperator with_backend(Backend b) const;

    Diagnostics validate() const;

    bool operator==(const UpperTransitionOperator& other) const { return rows_ == other.rows_; }

private:
    std::vector<CredalSpec> rows_;
    Backend backend_;
};

/// Vacuous rows over the given space: every gamble maps to its maximum.
UpperTransitionOperator vacuous_operator(const StateSpace& space);

/// One application: (apply_upper(T, f))(x) is the row-x upper expectation.
Gamble apply_upper(const UpperTransitionOperator& t, const Gamble& f);
Gamble apply_lower(const UpperTransitionOperator& t, const Gamble& f);

/// n-fold application, n >= 0.
Gamble iterate_upper(const UpperTransitionOperator& t, const Gamble& f, long n);
Gamble iterate_lower(const UpperTransitionOperator& t, const Gamble& f, long n);

/// Bounds on the expectation of f after n steps from the initial model:
/// the initial lower/upper expectation of the n-fold lower/upper image.
std::pair<double, double> distribution_bounds(const CredalSpec& initial,
                                              const UpperTransitionOperator& t, long n,
                                              const Gamble& f);

/// Componentwise bounds on the n-step state distribution.
struct MassBounds {
    std::vector<double> lower;
    std::vector<double> upper;
};

MassBounds nstep_mass_bounds(const CredalSpec& initial, const UpperTransitionOperator& t,
                             long n);

/// Bounds on n-step transition probabilities: entry [x][j] bounds the
/// probability of being in state j after n steps started from x.
struct EventBoundMatrices {
    std::vector<std::vector<double>> lower;
    std::vector<std::vector<double>> upper;
};

EventBoundMatrices nstep_event_bounds(const UpperTransitionOperator& t, long n);

}  // namespace credal
