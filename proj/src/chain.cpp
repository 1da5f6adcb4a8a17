#include "credal/chain.hpp"

#include <stdexcept>
#include <string>

#include "credal/errors.hpp"

namespace credal {

UpperTransitionOperator::UpperTransitionOperator(std::vector<CredalSpec> rows, Backend backend)
    : rows_(std::move(rows)), backend_(backend) {
    if (rows_.empty()) throw validation_error("transition operator needs at least one row");
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        if (auto dim = rows_[x].dimension(); dim && *dim != rows_.size())
            throw validation_error("row " + std::to_string(x) + " has dimension " +
                                   std::to_string(*dim) + ", expected " +
                                   std::to_string(rows_.size()));
    }
}

UpperTransitionOperator UpperTransitionOperator::from_matrix(
    const std::vector<std::vector<double>>& matrix) {
    std::vector<CredalSpec> rows;
    rows.reserve(matrix.size());
    for (const auto& row : matrix) rows.push_back(CredalSpec::precise(row));
    return UpperTransitionOperator(std::move(rows));
}

UpperTransitionOperator UpperTransitionOperator::from_interval_matrices(
    const std::vector<std::vector<double>>& lower,
    const std::vector<std::vector<double>>& upper) {
    if (lower.size() != upper.size())
        throw validation_error("interval matrices have different row counts");
    std::vector<CredalSpec> rows;
    rows.reserve(lower.size());
    for (std::size_t x = 0; x < lower.size(); ++x)
        rows.push_back(CredalSpec::intervals(lower[x], upper[x]));
    return UpperTransitionOperator(std::move(rows));
}

UpperTransitionOperator UpperTransitionOperator::vacuous(std::size_t n) {
    if (n == 0) throw validation_error("empty state space");
    return UpperTransitionOperator(std::vector<CredalSpec>(n, CredalSpec::vacuous()));
}

UpperTransitionOperator UpperTransitionOperator::with_backend(Backend b) const {
    UpperTransitionOperator out = *this;
    out.backend_ = b;
    return out;
}

Diagnostics UpperTransitionOperator::validate() const {
    Diagnostics d;
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        Diagnostics row = credal::validate(rows_[x]);
        for (const auto& issue : row.issues)
            d.issues.push_back("row " + std::to_string(x) + ": " + issue);
    }
    return d;
}

UpperTransitionOperator vacuous_operator(const StateSpace& space) {
    return UpperTransitionOperator::vacuous(space.size());
}

Gamble apply_upper(const UpperTransitionOperator& t, const Gamble& f) {
    if (f.size() != t.size())
        throw std::invalid_argument("gamble size does not match transition operator");
    Gamble g(std::vector<double>(t.size(), 0.0));
    for (std::size_t x = 0; x < t.size(); ++x)
        g[x] = upper_natural_extension(t.row(x), f, t.backend());
    return g;
}

Gamble apply_lower(const UpperTransitionOperator& t, const Gamble& f) {
    if (f.size() != t.size())
        throw std::invalid_argument("gamble size does not match transition operator");
    Gamble g(std::vector<double>(t.size(), 0.0));
    for (std::size_t x = 0; x < t.size(); ++x)
        g[x] = lower_natural_extension(t.row(x), f, t.backend());
    return g;
}

namespace {

long checked_steps(long n) {
    if (n < 0) throw std::invalid_argument("step count must be non-negative");
    return n;
}

}  // namespace

Gamble iterate_upper(const UpperTransitionOperator& t, const Gamble& f, long n) {
    Gamble g = f;
    for (long k = 0; k < checked_steps(n); ++k) g = apply_upper(t, g);
    return g;
}

Gamble iterate_lower(const UpperTransitionOperator& t, const Gamble& f, long n) {
    Gamble g = f;
    for (long k = 0; k < checked_steps(n); ++k) g = apply_lower(t, g);
    return g;
}

std::pair<double, double> distribution_bounds(const CredalSpec& initial,
                                              const UpperTransitionOperator& t, long n,
                                              const Gamble& f) {
    const double lo = lower_natural_extension(initial, iterate_lower(t, f, n));
    const double up = upper_natural_extension(initial, iterate_upper(t, f, n));
    return {lo, up};
}

MassBounds nstep_mass_bounds(const CredalSpec& initial, const UpperTransitionOperator& t,
                             long n) {
    MassBounds out;
    out.lower.resize(t.size());
    out.upper.resize(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        const Gamble ind = Gamble::indicator(t.size(), std::uint32_t{1} << j);
        const auto [lo, up] = distribution_bounds(initial, t, n, ind);
        out.lower[j] = lo;
        out.upper[j] = up;
    }
    return out;
}

EventBoundMatrices nstep_event_bounds(const UpperTransitionOperator& t, long n) {
    EventBoundMatrices out;
    out.lower.assign(t.size(), std::vector<double>(t.size(), 0.0));
    out.upper.assign(t.size(), std::vector<double>(t.size(), 0.0));
    for (std::size_t j = 0; j < t.size(); ++j) {
        const Gamble ind = Gamble::indicator(t.size(), std::uint32_t{1} << j);
        const Gamble up = iterate_upper(t, ind, n);
        const Gamble lo = iterate_lower(t, ind, n);
        for (std::size_t x = 0; x < t.size(); ++x) {
            out.lower[x][j] = lo[x];
            out.upper[x][j] = up[x];
        }
    }
    return out;
}

}  // namespace credal
